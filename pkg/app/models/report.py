"""Bound report models shared by validators, suites and the report emitter."""

from enum import Enum
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field

Value = Union[int, str]


class Relation(str, Enum):
    """How a computed value must relate to the expected one."""

    EQ = "=="
    LE = "<="
    GE = ">="


class Status(str, Enum):
    """Outcome of a single entry."""

    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


class BoundEntry(BaseModel):
    """One named (expected, computed, status) triple."""
    name: str = Field(..., description="Stable entry name; reports are sorted by it")
    expected: Optional[Value] = Field(None, description="Expected value or bound")
    computed: Optional[Value] = Field(None, description="Value the oracle produced")
    relation: Relation = Field(Relation.EQ, description="Required relation computed <op> expected")
    status: Status
    reason: Optional[str] = Field(None, description="Why an entry was skipped or failed")

    @classmethod
    def compare(cls, name: str, expected: int, computed: int, relation: Relation = Relation.EQ) -> "BoundEntry":
        """Build an entry whose status follows from the relation."""
        if relation is Relation.EQ:
            ok = computed == expected
        elif relation is Relation.LE:
            ok = computed <= expected
        else:
            ok = computed >= expected
        return cls(name=name, expected=expected, computed=computed, relation=relation,
                   status=Status.PASS if ok else Status.FAIL)

    @classmethod
    def check(cls, name: str, ok: bool, expected: Value = "true", computed: Optional[Value] = None,
              reason: Optional[str] = None) -> "BoundEntry":
        """Build a pass/fail entry for a boolean property."""
        if computed is None:
            computed = "true" if ok else "false"
        return cls(name=name, expected=expected, computed=computed,
                   status=Status.PASS if ok else Status.FAIL, reason=None if ok else reason)

    @classmethod
    def skipped(cls, name: str, expected: Optional[Value] = None, computed: Optional[Value] = None,
                reason: str = "budget") -> "BoundEntry":
        return cls(name=name, expected=expected, computed=computed, status=Status.SKIPPED, reason=reason)

    @property
    def status_text(self) -> str:
        if self.status is Status.SKIPPED:
            return f"SKIPPED({self.reason or 'budget'})"
        return self.status.value

    @property
    def expected_text(self) -> str:
        if self.expected is None:
            return "-"
        if self.relation is Relation.EQ:
            return str(self.expected)
        return f"{self.relation.value}{self.expected}"

    @property
    def computed_text(self) -> str:
        return "-" if self.computed is None else str(self.computed)


class BoundReport(BaseModel):
    """Collection of entries produced by a validator or a suite."""
    suite: str = Field("", description="Suite or validator name")
    seed: Optional[int] = Field(None, description="PRNG seed of randomized sweeps")
    entries: List[BoundEntry] = Field(default_factory=list)

    def add(self, entry: BoundEntry) -> BoundEntry:
        self.entries.append(entry)
        return entry

    def add_all(self, entries: List[BoundEntry]) -> None:
        self.entries.extend(entries)

    def extend(self, other: "BoundReport") -> None:
        self.entries.extend(other.entries)

    def sorted_entries(self) -> List[BoundEntry]:
        return sorted(self.entries, key=lambda e: e.name)

    @property
    def passed(self) -> bool:
        """True iff no entry failed. Skipped entries do not count as failures."""
        return all(e.status is not Status.FAIL for e in self.entries)

    @property
    def failures(self) -> List[BoundEntry]:
        return [e for e in self.sorted_entries() if e.status is Status.FAIL]

    def counts(self) -> Dict[str, int]:
        result = {s.value: 0 for s in Status}
        for e in self.entries:
            result[e.status.value] += 1
        return result

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)


class ReportRow(BaseModel):
    """Serialised form of an entry: the four report columns as text."""
    name: str
    expected: str
    computed: str
    status: str


def _parse_value(text: str) -> Optional[Value]:
    if text == "-":
        return None
    try:
        return int(text)
    except ValueError:
        return text


def entry_to_row(entry: BoundEntry) -> ReportRow:
    return ReportRow(
        name=entry.name,
        expected=entry.expected_text,
        computed=entry.computed_text,
        status=entry.status_text,
    )


def entry_from_row(row: ReportRow) -> BoundEntry:
    """Inverse of entry_to_row.

    Raises:
        ValueError: If the status column is not PASS, FAIL or SKIPPED(reason)
    """
    relation = Relation.EQ
    expected_text = row.expected
    for candidate in (Relation.LE, Relation.GE):
        if expected_text.startswith(candidate.value):
            relation, expected_text = candidate, expected_text[len(candidate.value):]
            break
    reason = None
    if row.status.startswith("SKIPPED(") and row.status.endswith(")"):
        status, reason = Status.SKIPPED, row.status[len("SKIPPED("):-1]
    else:
        status = Status(row.status)
    return BoundEntry(
        name=row.name,
        expected=_parse_value(expected_text),
        computed=_parse_value(row.computed),
        relation=relation,
        status=status,
        reason=reason,
    )
