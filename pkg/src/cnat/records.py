import csv
import io
import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

CSV_COLUMNS = ["n", "quantity", "value", "source"]


class Quantity(Enum):
    T = "T"
    A = "A"
    B = "B"
    D = "D"
    EO = "eo"


class Source(Enum):
    ENUMERATION = "enumeration"
    RECURRENCE = "recurrence"
    CLOSED_FORM = "closed_form"

    @property
    def flag(self) -> str:
        """Short name used on the command line and in verify reports."""
        return _FLAGS[self]

    @classmethod
    def from_flag(cls, flag: str) -> "Source":
        for source, name in _FLAGS.items():
            if name == flag:
                return source
        raise ValueError(f"Unknown source {flag!r}")


_FLAGS = {
    Source.ENUMERATION: "enum",
    Source.RECURRENCE: "rec",
    Source.CLOSED_FORM: "closed",
}


@dataclass(frozen=True)
class OutputRecord:
    """
    One computed value with its provenance.
    For eo records n is the set size and value is (k, even, odd).
    """
    n: int
    quantity: Quantity
    value: int | tuple[int, int, int]
    source: Source

    def to_dict(self) -> dict:
        value = list(self.value) if isinstance(self.value, tuple) else self.value
        return {"n": self.n, "quantity": self.quantity.value, "value": value, "source": self.source.value}

    @classmethod
    def from_dict(cls, data: dict) -> "OutputRecord":
        value = data["value"]
        if isinstance(value, list):
            value = tuple(value)
        return cls(data["n"], Quantity(data["quantity"]), value, Source(data["source"]))

    def to_text(self) -> str:
        if self.quantity is Quantity.EO:
            k, even, odd = self.value
            return f"eo_{self.n}[{k}] = {even}/{odd} ({self.source.value})"
        return f"{self.quantity.value}_{self.n} = {self.value} ({self.source.value})"


def to_text(records: Iterable[OutputRecord]) -> str:
    return "\n".join(record.to_text() for record in records)


def to_json(records: Iterable[OutputRecord]) -> str:
    return json.dumps([record.to_dict() for record in records], indent=2)


def records_from_json(text: str) -> list[OutputRecord]:
    return [OutputRecord.from_dict(item) for item in json.loads(text)]


def to_csv(records: Iterable[OutputRecord]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in records:
        value = record.value
        if isinstance(value, tuple):
            value = ":".join(str(v) for v in value)
        writer.writerow([record.n, record.quantity.value, value, record.source.value])
    return buffer.getvalue().rstrip("\n")


FORMATTERS = {
    "text": to_text,
    "json": to_json,
    "csv": to_csv,
}
