"""Pass/fail reports produced by the validators and condition checkers.

A report is a list of named checks plus a free-form ``data`` dict for
computed byproducts (derived classes, witnesses, counts).  Failures are
report entries, not exceptions; callers decide what is fatal.
"""


class CheckItem:
    __slots__ = ("name", "passed", "detail")

    def __init__(self, name, passed, detail=""):
        self.name = name
        self.passed = bool(passed)
        self.detail = detail

    def __repr__(self):
        mark = "ok" if self.passed else "FAIL"
        if self.detail:
            return "%s: %s (%s)" % (self.name, mark, self.detail)
        return "%s: %s" % (self.name, mark)


class ValidationReport:
    """Ordered collection of checks with a computed-data side channel."""

    def __init__(self, subject=""):
        self.subject = subject
        self.items = []
        self.data = {}

    def add(self, name, passed, detail=""):
        self.items.append(CheckItem(name, passed, detail))
        return self.items[-1]

    @property
    def ok(self):
        return all(item.passed for item in self.items)

    def failures(self):
        return [item for item in self.items if not item.passed]

    def check(self, name):
        for item in self.items:
            if item.name == name:
                return item
        raise KeyError(name)

    def passed(self, name):
        return self.check(name).passed

    def to_json(self):
        out = {
            "subject": self.subject,
            "ok": self.ok,
            "checks": [
                {"name": it.name, "passed": it.passed, "detail": it.detail}
                for it in self.items
            ],
        }
        if self.data:
            out["data"] = {k: _jsonable(v) for k, v in self.data.items()}
        return out

    def __repr__(self):
        head = "ValidationReport(%s, %s)" % (
            self.subject or "?",
            "ok" if self.ok else "FAILED",
        )
        return "\n  ".join([head] + [repr(it) for it in self.items])


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(w) for w in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(w) for k, w in v.items()}
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    return repr(v)


# Both checker families share the same shape; the aliases keep call sites
# readable where the distinction matters.
ConditionReport = ValidationReport
MembershipReport = ValidationReport
