from dataclasses import dataclass


@dataclass(frozen=True)
class ValidationEntry:
    code: str
    message: str

    def render(self) -> str:
        return f"E:{self.code}:{self.message}"


@dataclass(frozen=True)
class ValidationReport:
    entries: tuple[ValidationEntry, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.entries

    def codes(self) -> list[str]:
        return [entry.code for entry in self.entries]

    def render(self) -> str:
        return "".join(entry.render() + "\n" for entry in self.entries)
