# -*- coding: utf-8 -*-
"""JSON dump format for committed states.

    {"mu": 8, "dimension": 4, "amplitudes": [[index, re_units, im_units], ...]}

Indices ascend. EXACT-mode states use ``"mu": null`` and store each component
as a fraction string (``"1/2"``).
"""

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from src.errors import ConfigInvalid
from src.numeric.exact import ExactComplex
from src.numeric.fixedpoint import FixedComplex, Resolution
from src.state.statevec import StateVector


class StateDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    mu: Optional[int] = None
    dimension: int = Field(..., ge=1)
    amplitudes: List[List[Union[int, str]]]


def to_dict(state: StateVector) -> Dict[str, Any]:
    rows = []
    for j in sorted(state.amplitudes):
        a = state.amplitudes[j]
        if state.is_exact:
            rows.append([j, str(a.re), str(a.im)])
        else:
            rows.append([j, a.re_units, a.im_units])
    return {
        "mu": None if state.is_exact else state.resolution.mu,
        "dimension": state.dimension,
        "amplitudes": rows,
    }


def from_dict(doc: Dict[str, Any]) -> StateVector:
    try:
        parsed = StateDocument.model_validate(doc)
    except ValidationError as e:
        raise ConfigInvalid(f"invalid state document: {e}") from e

    try:
        if parsed.mu is None:
            amps = {int(j): ExactComplex(Fraction(re), Fraction(im)) for j, re, im in parsed.amplitudes}
            return StateVector(parsed.dimension, amps, None)
        r = Resolution(parsed.mu)
        amps = {int(j): FixedComplex(int(re), int(im), r) for j, re, im in parsed.amplitudes}
        return StateVector(parsed.dimension, amps, r)
    except (ValueError, TypeError) as e:
        raise ConfigInvalid(f"invalid state document: {e}") from e


def dumps(state: StateVector) -> str:
    return json.dumps(to_dict(state), separators=(",", ":"))


def loads(text: str) -> StateVector:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigInvalid(f"state dump is not valid JSON: {e}") from e
    return from_dict(doc)
