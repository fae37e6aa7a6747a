"""Plot-ready datasets for every figure of the beam-splitter study.

Each figure id maps to fixed parameters; :func:`figure_dataset` returns the
columns that the figure plots.  Nothing here draws anything.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .approx import envelope_curves, gaussian_fit, phi0, q_function
from .baselines import classical_distribution, contrast, pair_model_distribution, semiclassical_closed_form
from .numerics import format_float
from .quantum import BeamConfig, exact_distribution

__all__ = ["FigureSpec", "Dataset", "FIGURES", "figure_dataset"]


@dataclass(frozen=True)
class FigureSpec:
    id: str
    kind: str
    title: str
    params: dict = field(default_factory=dict)


FIGURES = {
    f.id: f
    for f in [
        FigureSpec("2a", "phase_baselines", "semiclassical and classical laws, equal intensities, N = 50",
                   {"n_total": 50, "i_alpha": 1, "i_beta": 1}),
        FigureSpec("2b", "phase_baselines", "semiclassical and classical laws, intensity ratio 6/44, N = 50",
                   {"n_total": 50, "i_alpha": 44, "i_beta": 6}),
        FigureSpec("3", "q_sweep", "Q(phibar) for m1 = 17, m2 = 83, unit peak height",
                   {"m1": 17, "m2": 83, "points": 721}),
        FigureSpec("4", "exact", "exact distribution, Na = Nb = 4", {"n_alpha": 4, "n_beta": 4}),
        FigureSpec("4b", "exact", "exact distribution, Na = 4, Nb = 5", {"n_alpha": 4, "n_beta": 5}),
        FigureSpec("5", "exact", "exact distribution, Na = Nb = 25, with semiclassical overlay",
                   {"n_alpha": 25, "n_beta": 25, "overlay": ("semiclassical",)}),
        FigureSpec("6", "exact", "exact distribution, Na = 26, Nb = 25, with envelope branches",
                   {"n_alpha": 26, "n_beta": 25, "overlay": ("envelope",)}),
        FigureSpec("7", "exact", "exact distribution, Na = 26, Nb = 24, with envelope branches",
                   {"n_alpha": 26, "n_beta": 24, "overlay": ("envelope",)}),
        FigureSpec("8a", "exact", "exact distribution, Na = 28, Nb = 22", {"n_alpha": 28, "n_beta": 22}),
        FigureSpec("8b", "exact", "exact distribution, Na = 44, Nb = 6, with ratio-6/44 baselines",
                   {"n_alpha": 44, "n_beta": 6, "overlay": ("semiclassical", "classical")}),
        FigureSpec("9", "pair", "pair model, Na = Nb = 25", {"n_alpha": 25, "n_beta": 25}),
        FigureSpec("10", "pair", "pair model, Na = 26, Nb = 25", {"n_alpha": 26, "n_beta": 25}),
    ]
}


@dataclass(frozen=True)
class Dataset:
    figure: str
    columns: tuple
    rows: list

    def column(self, name: str) -> np.ndarray:
        i = self.columns.index(name)
        return np.array([row[i] for row in self.rows], dtype=float)

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(",".join(self.columns) + "\n")
        for row in self.rows:
            buf.write(",".join(str(v) if isinstance(v, int) else format_float(v) for v in row) + "\n")
        return buf.getvalue()

    def to_json(self) -> str:
        spec = FIGURES[self.figure]
        doc = {
            "figure": self.figure,
            "title": spec.title,
            "params": {k: list(v) if isinstance(v, tuple) else v for k, v in spec.params.items()},
            "columns": list(self.columns),
            "rows": [list(r) for r in self.rows],
        }
        return json.dumps(doc, indent=2) + "\n"


def _phase_baselines(spec: FigureSpec) -> Dataset:
    p = spec.params
    n = p["n_total"]
    r = contrast(p["i_alpha"], p["i_beta"])
    semi = semiclassical_closed_form(n, r)
    classical = classical_distribution(n, r)
    rows = [(m1, n - m1, float(semi[m1]), float(classical[m1])) for m1 in range(n + 1)]
    return Dataset(spec.id, ("m1", "m2", "semiclassical", "classical"), rows)


def _q_sweep(spec: FigureSpec) -> Dataset:
    p = spec.params
    out = (p["m1"], p["m2"])
    grid = np.linspace(-math.pi, math.pi, p["points"])
    fit = gaussian_fit(out)
    height = float(q_function(phi0(p["m1"], sum(out)), out))
    q = q_function(grid, out) / height
    g = fit(grid) / fit.prefactor
    rows = [(float(x), float(a), float(b)) for x, a, b in zip(grid, q, g)]
    return Dataset(spec.id, ("phibar", "q", "gaussian"), rows)


def _exact(spec: FigureSpec) -> Dataset:
    p = spec.params
    cfg = BeamConfig(p["n_alpha"], p["n_beta"])
    n = cfg.n_total
    dist = exact_distribution(cfg)
    columns = ["m1", "m2", "p"]
    extra = []
    for overlay in p.get("overlay", ()):
        if overlay == "semiclassical":
            columns.append("semiclassical")
            extra.append(semiclassical_closed_form(n, contrast(cfg.n_alpha, cfg.n_beta)).probabilities())
        elif overlay == "classical":
            columns.append("classical")
            extra.append(classical_distribution(n, contrast(cfg.n_alpha, cfg.n_beta)).probabilities())
        elif overlay == "envelope":
            env = envelope_curves(cfg)
            m = np.arange(n + 1)
            columns += ["envelope_even", "envelope_odd"]
            extra += [env.even(m), env.odd(m)]
    rows = [
        (m1, n - m1, float(dist[m1]), *(float(col[m1]) for col in extra)) for m1 in range(n + 1)
    ]
    return Dataset(spec.id, tuple(columns), rows)


def _pair(spec: FigureSpec) -> Dataset:
    p = spec.params
    dist = pair_model_distribution(BeamConfig(p["n_alpha"], p["n_beta"]))
    n = dist.n_total
    return Dataset(spec.id, ("m1", "m2", "p"), [(m1, n - m1, float(dist[m1])) for m1 in range(n + 1)])


_BUILDERS = {"phase_baselines": _phase_baselines, "q_sweep": _q_sweep, "exact": _exact, "pair": _pair}


def figure_dataset(figure_id: str) -> Dataset:
    try:
        spec = FIGURES[str(figure_id)]
    except KeyError:
        raise KeyError(f"unknown figure {figure_id!r}; known: {', '.join(FIGURES)}") from None
    return _BUILDERS[spec.kind](spec)
