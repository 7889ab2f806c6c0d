from dataclasses import dataclass


@dataclass(frozen=True)
class ValidationResult:
    suite: str
    check: str
    passed: bool
    detail: str
