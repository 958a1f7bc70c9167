from dataclasses import dataclass

ACCUMULATION_FORMS = ("accumulated", "recursive")


@dataclass(frozen=True)
class Stage1Options:
    objective_big_m: float | None = None
    weight_wait_by_size: bool = False
    accumulation_form: str = "accumulated"
    max_candidate_trains: int | None = None
