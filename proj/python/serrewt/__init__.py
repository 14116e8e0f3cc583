"""Serre weight prediction for tamely ramified two-dimensional local types."""

from ._core import (
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_VERIFICATION_FAILURE,
    InputError,
    closed_form,
    jh,
    predict,
    predict_text,
    reproduce_tables,
    verify,
    verify_suites,
)

__all__ = [
    "EXIT_INPUT_ERROR",
    "EXIT_OK",
    "EXIT_VERIFICATION_FAILURE",
    "InputError",
    "closed_form",
    "jh",
    "predict",
    "predict_text",
    "reproduce_tables",
    "verify",
    "verify_suites",
]
