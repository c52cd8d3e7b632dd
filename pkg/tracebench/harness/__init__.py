"""Scenario catalogue, program generation and erasure fuzzing."""

from .fuzz import check_erasure, compare_erased, erasure_fuzz
from .generator import GenConfig, ProgramGenerator, gen_program, gen_programs
from .reports import (
    AxiomEntry, AxiomReport, CatalogueReport, FuzzFailure, FuzzReport,
    LemmaEntry, LemmaReport, ScenarioReport,
)
from .scenarios import SCENARIOS, Scenario, get_scenario, list_scenarios, run_catalogue, run_scenario

__all__ = [
    "AxiomEntry",
    "AxiomReport",
    "CatalogueReport",
    "FuzzFailure",
    "FuzzReport",
    "GenConfig",
    "LemmaEntry",
    "LemmaReport",
    "ProgramGenerator",
    "SCENARIOS",
    "Scenario",
    "ScenarioReport",
    "check_erasure",
    "compare_erased",
    "erasure_fuzz",
    "gen_program",
    "gen_programs",
    "get_scenario",
    "list_scenarios",
    "run_catalogue",
    "run_scenario",
]
