"""Machine-readable record of printed formulas that brute force contradicts.

Each entry names the printed form, the form this package adopts, and the check
that decides between them.  The wheel Betti cells were frozen from Hochster
tables when the package was built; ``tests/test_acceptance.py`` recomputes
them and fails if the set of disagreements ever changes.
"""
from __future__ import annotations

import json

# n -> [(i, j, published closed-form value, Hochster value)]
WHEEL_BETTI_DISCREPANCIES: dict[int, list[tuple[int, int, int, int]]] = {
    3: [],
    4: [],
    5: [(2, 5, 1, 0), (3, 5, 0, 1), (3, 6, 1, 0), (4, 6, 0, 1)],
    6: [(3, 5, 3, 9)],
    7: [(3, 5, 7, 21), (4, 6, 0, 21)],
    8: [(3, 5, 12, 36), (4, 6, 0, 36), (4, 8, 1, 0), (5, 7, 0, 12), (5, 8, 0, 1), (5, 9, 1, 0), (6, 9, 0, 1)],
    9: [(3, 5, 18, 54), (4, 6, 0, 54), (4, 7, 6, 12), (5, 7, 0, 18), (5, 8, 3, 18)],
    10: [(3, 5, 25, 75), (4, 6, 0, 75), (4, 7, 20, 40), (5, 7, 0, 25), (5, 8, 10, 60), (6, 9, 0, 40)],
    11: [
        (3, 5, 33, 99), (4, 6, 0, 99), (4, 7, 44, 88), (5, 7, 0, 33), (5, 8, 22, 132), (6, 9, 0, 88),
        (6, 11, 1, 0), (7, 10, 0, 22), (7, 11, 0, 1), (7, 12, 1, 0), (8, 12, 0, 1),
    ],
    12: [
        (3, 5, 42, 126), (4, 6, 0, 126), (4, 7, 80, 160), (5, 7, 0, 42), (5, 8, 40, 240),
        (5, 9, 9, 15), (6, 9, 0, 160), (6, 10, 9, 30), (7, 10, 0, 40), (7, 11, 3, 30),
    ],
}

TYPO_LEDGER: list[dict] = [
    {
        "id": "hilbert-cycle-recursion-sign",
        "printed": "H_{C_n}(t) = H_{L_{n-2}}(t) - t/(1-t) H_{L_{n-4}}(t)",
        "adopted": "H_{C_n}(t) = H_{L_{n-2}}(t) + t/(1-t) H_{L_{n-4}}(t)",
        "adjudicated_by": "oracle.resolve_recursion_sign: brute-force monomial counts of C_n, 3 <= n <= 10",
    },
    {
        "id": "cycle-poincare-denominator",
        "printed": "P_{C_n} = (1+t) P_{L_{n-2}} P_{L_{n-4}} / (P_{L_{n-2}} + (1+t) P_{L_{n-4}})",
        "adopted": "P_{C_n} = (1+t) P_{L_{n-2}} P_{L_{n-4}} / ((1+t) P_{L_{n-4}} - t P_{L_{n-2}})",
        "adjudicated_by": "oracle.resolve_recursion_sign: Koszul identity against brute-force Hilbert series, 3 <= n <= 10",
    },
    {
        "id": "hilbert-c5-denominator",
        "printed": "H_{C_5}(t) = (1+3t+t^2)/(1-t)^3",
        "adopted": "H_{C_5}(t) = (1+3t+t^2)/(1-t)^2",
        "adjudicated_by": "oracle.hilbert_bruteforce and complex.hilbert_from_complex on the 5-cycle",
    },
    {
        "id": "hyperstar-vertex-count",
        "printed": "hyperstar has n(d-alpha) vertices",
        "adopted": "hyperstar has n(d-alpha)+alpha vertices (alpha core vertices plus n private blocks)",
        "adjudicated_by": "hypergraph.validate_family and the (1+t)^{n(d-alpha)+alpha} numerator of the star series",
    },
    {
        "id": "poincare-series-start-index",
        "printed": "P_R(t) = sum_{i>=1} dim Tor_i^R(k,k) t^i",
        "adopted": "P_R(t) = sum_{i>=0} dim Tor_i^R(k,k) t^i (constant term 1)",
        "adjudicated_by": "every displayed Poincare series has constant term 1",
    },
    {
        "id": "free-vertex-series-notation",
        "printed": "the 2*alpha < d closed forms label their series P_{C_n} and P_{L_n}",
        "adopted": "the series belong to the hypercycle C_n^{d,alpha} and hyperline L_n^{d,alpha}",
        "adjudicated_by": "numerator exponents n(d-alpha) and n(d-alpha)+alpha are the hypergraph vertex counts",
    },
    {
        "id": "wheel-top-betti-3m+2",
        "printed": "n = 3m+2: beta_{2m,n}(W_n) = beta_{2m+1,n+1}(W_n) = 1",
        "adopted": "n = 3m+2: beta_{2m+1,n}(W_n) = beta_{2m+2,n+1}(W_n) = 1",
        "adjudicated_by": "complex.hochster_betti on W_5, W_8, W_11",
    },
    {
        "id": "wheel-nonlinear-betti-formula",
        "printed": "j > i+1: beta_{i,j}(W_n) = n/(n-2(j-i)) C(n-2(j-i), j-i) C(j-i-1, 2i-j)",
        "adopted": "closedforms.betti_wheel_compose (cycle Hochster table shifted and added); "
        "the printed formula is kept verbatim in betti_wheel_closed",
        "adjudicated_by": "complex.hochster_betti on W_n, 3 <= n <= 12; disagreeing cells listed in cells",
        "cells": {
            str(n): [{"i": i, "j": j, "printed": a, "hochster": b} for i, j, a, b in cells]
            for n, cells in WHEEL_BETTI_DISCREPANCIES.items()
            if cells
        },
    },
]


def recorded_wheel_cells(n: int) -> dict[tuple[int, int], tuple[int, int]] | None:
    """Recorded (closed, Hochster) disagreements for W_n, or None if n was never adjudicated."""
    cells = WHEEL_BETTI_DISCREPANCIES.get(n)
    if cells is None:
        return None
    return {(i, j): (a, b) for i, j, a, b in cells}


def ledger_json() -> str:
    return json.dumps({"entries": TYPO_LEDGER}, indent=2, sort_keys=True)
