"""
spectrum/parsing.py — Spectrum literals for the command line.

  "0.1,0.9"                    explicit probabilities (floats)
  "1/10,9/10"                  explicit probabilities (fractions)
  "depolarizing:d=3,eta=0.3"   depolarizing noise

With exact=True every token is read as an exact rational ("0.1" is 1/10);
otherwise tokens become floats.
"""
from __future__ import annotations

from fractions import Fraction

from purity_sim.core.errors import DomainError
from purity_sim.spectrum.sampling import depolarizing
from purity_sim.spectrum.schemas import Spectrum

DEPOLARIZING_PREFIX = "depolarizing:"


def _number(token: str, exact: bool) -> Fraction | float:
    token = token.strip()
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"Malformed number {token!r} in spectrum literal") from exc
    return value if exact else float(value)


def parse_spectrum(text: str, exact: bool = False) -> Spectrum:
    text = text.strip()
    if not text:
        raise DomainError("Empty spectrum literal")
    if text.startswith(DEPOLARIZING_PREFIX):
        return _parse_depolarizing(text[len(DEPOLARIZING_PREFIX):], exact)
    return Spectrum.of(_number(tok, exact) for tok in text.split(","))


def _parse_depolarizing(body: str, exact: bool) -> Spectrum:
    fields: dict[str, str] = {}
    for item in body.split(","):
        key, sep, value = item.partition("=")
        if not sep:
            raise DomainError(f"Expected key=value in depolarizing literal, got {item!r}")
        fields[key.strip().lower()] = value.strip()
    if set(fields) != {"d", "eta"}:
        raise DomainError(f"Depolarizing literal needs exactly d= and eta=, got {sorted(fields)}")
    try:
        d = int(fields["d"])
    except ValueError as exc:
        raise DomainError(f"Malformed dimension {fields['d']!r}") from exc
    return depolarizing(d, _number(fields["eta"], exact))
