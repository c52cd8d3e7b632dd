"""Machine-readable reports for scenarios, fuzzing, axioms and lemmas."""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class ScenarioReport(BaseModel):
    """Outcome of one catalogue scenario; ``trace`` holds printed events."""

    id: str
    kind: str
    lang: str
    trace: List[str] = Field(default_factory=list)
    verdicts: List[bool] = Field(default_factory=list)
    final: bool
    expected_final: bool
    rejected_at: Optional[int] = None
    expected_rejection: Optional[int] = None
    status: Optional[str] = None
    value: Optional[str] = None
    trace_path: Optional[str] = None
    golden_match: Optional[bool] = None
    passed: bool
    message: Optional[str] = None

    def summary_line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        verdict = "accepted" if self.final else f"rejected at event {self.rejected_at}"
        line = f"{mark} {self.id:<22} {self.lang:<15} {len(self.trace):>3} events, {verdict}"
        if self.golden_match is not None:
            line += ", golden " + ("ok" if self.golden_match else "MISMATCH")
        if self.message:
            line += f" ({self.message})"
        return line


class FuzzFailure(BaseModel):
    index: int
    program: str
    reason: str


class FuzzReport(BaseModel):
    seed: int
    count: int
    fuel: int
    checked: int = 0
    skipped_fuel: int = 0
    with_emit: int = 0
    failures: List[FuzzFailure] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


class AxiomEntry(BaseModel):
    name: str
    passed: bool
    checked: int
    counterexample: Optional[str] = None


class AxiomReport(BaseModel):
    universe: str
    resources: int
    results: List[AxiomEntry] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.results)


class LemmaEntry(BaseModel):
    name: str
    holds: bool
    checked: int
    counterexample: Optional[str] = None


class LemmaReport(BaseModel):
    max_len: int
    results: List[LemmaEntry] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(entry.holds for entry in self.results)


class CatalogueReport(BaseModel):
    scenarios: List[ScenarioReport] = Field(default_factory=list)
    totals: Dict[str, int] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.scenarios)
