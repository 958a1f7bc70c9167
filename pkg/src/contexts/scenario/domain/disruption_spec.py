from dataclasses import dataclass


@dataclass(frozen=True)
class DisruptionSpec:
    s_begin: int
    s_end: int
    tau_begin: int
    tau_end: int
    turnback_minutes: int = 3

    @property
    def duration(self) -> int:
        return self.tau_end - self.tau_begin
