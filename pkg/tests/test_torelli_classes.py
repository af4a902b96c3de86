"""Symbols, evaluation coordinates, sign ledgers, independence certificates."""

import pytest

from cyclelab.cli import generate_distinct_splittings
from cyclelab.symplectic import reverse, shift, standard_splitting, standard_truncated
from cyclelab.torelli_classes import (
    AbelianCycleSymbol,
    CertificateError,
    CertificateReport,
    OrbitKey,
    PayloadToken,
    TorelliClassError,
    ZeroClass,
    apply_involution,
    independence_certificate,
    involution_sign,
    make_symbol,
    mu_permutation_sign,
    phi_evaluate,
    reversal_identity,
    theta_signs,
)


class TestPermutationSign:
    def test_basic_parities(self):
        assert mu_permutation_sign([0, 1, 2]) == 1
        assert mu_permutation_sign([1, 0, 2]) == -1
        assert mu_permutation_sign([2, 0, 1]) == 1
        assert mu_permutation_sign([]) == 1

    def test_reversal_parity_formula(self):
        for k in range(8):
            rev = list(reversed(range(k)))
            assert mu_permutation_sign(rev) == (-1) ** (k * (k - 1) // 2)

    def test_rejects_non_permutations(self):
        for bad in ([0, 0], [1, 2], [0, 2]):
            with pytest.raises(TorelliClassError):
                mu_permutation_sign(bad)


class TestPayloadToken:
    def test_degree_is_top_of_subsurface(self):
        assert PayloadToken(0, 2).degree == 4
        assert PayloadToken("left", 3).degree == 7

    def test_small_genus_rejected(self):
        with pytest.raises(TorelliClassError):
            PayloadToken(0, 1)


class TestMakeSymbol:
    def test_full_word_shape(self):
        for g in (3, 4, 5):
            sym = make_symbol("full", standard_splitting(g))
            assert sym.degree == 2 * g - 3
            assert sym.bp_count() == g - 2
            kinds = [t[0] for t in sym.twists]
            assert kinds == ["bp"] * (g - 2) + ["delta"] * (g - 1)
            assert sym.payload is None

    def test_truncated_word_shape(self):
        sym = make_symbol("truncated", standard_truncated(5, 2), payload=0)
        assert sym.degree == 3 * 5 - 5 - 2
        assert sym.bp_count() == 2
        assert sym.payload == PayloadToken(0, 2)
        # smallest truncated case pins the degree formula
        assert make_symbol("truncated", standard_truncated(4, 1), payload=0).degree == 6

    def test_family_guards(self):
        s = standard_splitting(4)
        with pytest.raises(TorelliClassError):
            make_symbol("full", s, payload=3)
        with pytest.raises(TorelliClassError):
            make_symbol("truncated", s, payload=0)
        with pytest.raises(TorelliClassError):
            make_symbol("other", s)
        with pytest.raises(TorelliClassError):
            make_symbol("full", "not a splitting")
        # n = g-2 leaves no room for the payload subsurface
        with pytest.raises(TorelliClassError):
            make_symbol("truncated", standard_truncated(4, 2), payload=0)

    def test_payload_token_genus_checked(self):
        s = standard_truncated(5, 2)
        assert make_symbol("truncated", s, payload=PayloadToken(1, 2)).payload.index == 1
        with pytest.raises(TorelliClassError):
            make_symbol("truncated", s, payload=PayloadToken(1, 3))

    def test_custom_duals(self):
        s = standard_splitting(4)
        # f_i + e_i still lies in summand i and pairs to one
        b = []
        for i in (1, 2):
            v = [0] * 8
            v[2 * i] = 1
            v[2 * i + 1] = 1
            b.append(v)
        sym = make_symbol("full", s, b=b)
        assert sym.b == tuple(tuple(v) for v in b)
        with pytest.raises(TorelliClassError):
            make_symbol("full", s, b=b[:1])
        bad = [list(v) for v in b]
        bad[0][2] = 0
        bad[0][3] = 0
        with pytest.raises(TorelliClassError):
            make_symbol("full", s, b=bad)


class TestBasisIndex:
    def test_reversal_folds(self):
        s = standard_splitting(4)
        sym = make_symbol("full", s)
        sym_rev = make_symbol("full", reverse(s))
        assert sym.basis_index() == sym_rev.basis_index()
        assert sym.orbit() == sym_rev.orbit()

    def test_shift_gives_new_index_in_same_orbit(self):
        s = standard_splitting(4)
        moved = shift(s, (1, 0, -2))
        sym = make_symbol("full", s)
        sym2 = make_symbol("full", moved)
        assert sym.orbit() == sym2.orbit()
        assert sym.basis_index() != sym2.basis_index()

    def test_truncated_index_ignores_reversal_fold(self):
        s = standard_truncated(5, 2)
        sym = make_symbol("truncated", s, payload=0)
        assert sym.basis_index() == s.summands


class TestPhiEvaluate:
    def test_own_orbit_gives_plus_one_coordinate(self):
        s = standard_splitting(3)
        sym = make_symbol("full", s)
        theta = phi_evaluate(s, sym)
        assert not theta.is_zero()
        assert theta.sign == 1
        assert theta.payload is None
        assert theta.coordinate() == (sym.basis_index(),)
        assert theta.checklist.ok
        assert theta.to_json()["sign"] == 1

    def test_orbit_key_argument_accepted(self):
        s = standard_splitting(3)
        sym = make_symbol("full", s)
        assert not phi_evaluate(OrbitKey.from_splitting(reverse(s)), sym).is_zero()

    def test_other_orbit_evaluates_to_zero(self):
        splittings = generate_distinct_splittings("full", 3, 2, seed=7)
        sym = make_symbol("full", splittings[0])
        out = phi_evaluate(splittings[1], sym)
        assert isinstance(out, ZeroClass)
        assert out.is_zero()
        assert out.to_json() == {"zero": True}

    def test_truncated_coordinate_carries_payload(self):
        s = standard_truncated(5, 1)
        one = phi_evaluate(s, make_symbol("truncated", s, payload=0))
        two = phi_evaluate(s, make_symbol("truncated", s, payload=1))
        assert one.coordinate() != two.coordinate()
        assert one.coordinate()[0] == two.coordinate()[0]
        assert one.payload[0] == ("W", 3)

    def test_rejects_non_symbol(self):
        with pytest.raises(TorelliClassError):
            phi_evaluate(standard_splitting(3), "word")


class TestSignLedgers:
    def test_theta_signs_agree_and_cancel(self):
        for g in range(3, 13):
            ledger = theta_signs(g)
            parity = (-1) ** ((g - 1) * (g - 2) // 2)
            assert ledger.class_reversal_sign == parity
            assert ledger.orientation_sign == parity
            assert ledger.product == 1
        with pytest.raises(TorelliClassError):
            theta_signs(2)

    def test_reversal_identity_total_is_plus_one(self):
        for g in (3, 4, 5, 6, 7, 8):
            rep = reversal_identity(make_symbol("full", standard_splitting(g)))
            assert rep.ok, repr(rep)
            assert rep.data["total"] == 1

    def test_reversal_identity_refuses_truncated(self):
        sym = make_symbol("truncated", standard_truncated(5, 1), payload=0)
        assert not reversal_identity(sym).ok

    def test_involution_signs(self):
        for g in range(3, 13):
            sign = involution_sign("full", g)
            assert int(sign) == (-1) ** (g - 2)
            assert len(sign.swaps) == g - 2
            assert len(sign.fixed) == g - 1
            for n in range(1, g - 2):
                tsign = involution_sign("truncated", g, n)
                assert int(tsign) == (-1) ** n
                assert tsign.payload_fixed is True

    def test_involution_guards(self):
        with pytest.raises(TorelliClassError):
            involution_sign("full", 2)
        with pytest.raises(TorelliClassError):
            involution_sign("truncated", 5)
        with pytest.raises(TorelliClassError):
            involution_sign("weird", 5)

    def test_apply_involution_realizes_sign(self):
        sym = make_symbol("full", standard_splitting(5))
        flipped, sign = apply_involution(sym)
        assert sign == (-1) ** 3
        # normal form: the word is the same class, with each pair reversed
        assert flipped == sym
        assert flipped.twists[0] == ("bp", "beta1_p", "beta1")
        back, sign2 = apply_involution(flipped)
        assert back.twists == sym.twists
        assert sign * sign2 == 1


class TestIndependenceCertificates:
    def test_distinct_full_symbols_certify(self):
        splittings = generate_distinct_splittings("full", 3, 4, seed=11)
        cert = independence_certificate(
            [make_symbol("full", s) for s in splittings]
        )
        assert cert.valid
        assert cert.rank == 4
        assert not cert.duplicates
        assert cert.chain_complete()
        assert cert.stability_certificate.valid
        for row in cert.matrix:
            assert sorted(row) == [0, 0, 0, 1]
        assert "one representative per reversal pair" in cert.axioms_cited

    def test_reversal_duplicate_refused(self):
        splittings = generate_distinct_splittings("full", 3, 3, seed=11)
        symbols = [make_symbol("full", s) for s in splittings]
        symbols.append(make_symbol("full", reverse(splittings[0])))
        cert = independence_certificate(symbols)
        assert not cert.valid
        assert cert.duplicates
        assert cert.rank == 3

    def test_truncated_payloads_are_columns(self):
        s = standard_truncated(5, 1)
        cert = independence_certificate(
            [make_symbol("truncated", s, payload=i) for i in range(3)]
        )
        assert cert.valid
        assert cert.rank == 3
        assert "payload classes with distinct indices are independent" in cert.axioms_cited
        repeat = independence_certificate(
            [make_symbol("truncated", s, payload=0) for _ in range(2)]
        )
        assert not repeat.valid
        assert repeat.duplicates

    def test_ablation_demotes(self):
        splittings = generate_distinct_splittings("full", 3, 2, seed=3)
        cert = independence_certificate([make_symbol("full", s) for s in splittings])
        assert cert.valid
        for link in CertificateReport.CHAIN:
            assert not cert.ablated(link).valid
        with pytest.raises(CertificateError):
            cert.ablated("bogus")

    def test_mixed_inputs_refused(self):
        with pytest.raises(CertificateError):
            independence_certificate([])
        full3 = make_symbol("full", standard_splitting(3))
        full4 = make_symbol("full", standard_splitting(4))
        with pytest.raises(CertificateError):
            independence_certificate([full3, full4])
        trunc = make_symbol("truncated", standard_truncated(5, 1), payload=0)
        with pytest.raises(CertificateError):
            independence_certificate([full4, trunc])

    def test_json_payload(self):
        cert = independence_certificate([make_symbol("full", standard_splitting(3))])
        payload = cert.to_json()
        assert payload["valid"] is True
        assert payload["rank"] == 1
        assert payload["stability_certificate_ref"]["valid"] is True
        assert len(payload["symbols"]) == 1
