from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS, FAIL, UNSAT, SAT = "PASS", "FAIL", "UNSAT", "SAT"


@dataclass
class Report:
    """Outcome of one verification: status plus per-item residuals and a witness."""

    check: str
    params: dict
    status: str = PASS
    residuals: list = field(default_factory=list)
    witness: Any = None

    def fail(self, **residual) -> None:
        self.status = FAIL
        self.residuals.append(residual)

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        return {"check": self.check, "params": self.params, "status": self.status,
                "residuals": self.residuals, "witness": self.witness}

    def to_text(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"{self.check}({params}): {self.status}"]
        for r in self.residuals:
            lines.append("  residual: " + ", ".join(f"{k}={v}" for k, v in r.items()))
        if self.witness is not None:
            lines.append(f"  witness: {self.witness}")
        return "\n".join(lines)
