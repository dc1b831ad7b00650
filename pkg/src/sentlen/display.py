"""Human-facing rendering of month values."""

from __future__ import annotations

OUT_OF_RANGE_LIMIT = 174.0


def _trim(value: float) -> str:
    if value == int(value):
        return str(int(value))
    return f"{value:.1f}"


def format_months(months: float) -> str:
    """``"23 months (1 year 11 months)"``; bare months when negative or
    under a year."""
    if months < 0 or months < 12:
        return f"{_trim(months)} months"
    years = int(months // 12)
    remainder = months - 12 * years
    year_word = "year" if years == 1 else "years"
    return f"{_trim(months)} months ({years} {year_word} {_trim(remainder)} months)"


def out_of_range(months: float) -> bool:
    """True when a prediction falls outside the observed 0-174 month range."""
    return months < 0 or months > OUT_OF_RANGE_LIMIT
