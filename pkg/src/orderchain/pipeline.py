"""Pipeline stages shared by the command line and the experiment scripts."""

from __future__ import annotations

import csv
import io
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterable, Sequence

from orderchain import toric
from orderchain.config import RunConfig, SweepConfig
from orderchain.ehrhart import (
    delta_vector,
    ehrhart_counts,
    is_fano,
    is_gorenstein_fano,
    is_normal_up_to,
)
from orderchain.geometry import dual_is_integral
from orderchain.polytopes import GammaKind, SizeMismatch, count_lattice_points, gamma
from orderchain.poset import Poset, all_posets


@dataclass
class RunReport:
    posetP: dict
    posetQ: dict
    kind: str
    counts: list[int] = field(default_factory=list)
    delta: list[int] = field(default_factory=list)
    flags: dict = field(default_factory=dict)
    groebner: dict | None = None
    hilbert: list | None = None
    timings: dict | None = None
    failure: str | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None

    def to_dict(self) -> dict:
        out = {
            "posetP": self.posetP,
            "posetQ": self.posetQ,
            "kind": self.kind,
            "counts": self.counts,
            "delta": self.delta,
        }
        if self.flags:
            out["flags"] = self.flags
        if self.groebner is not None:
            out["groebner"] = self.groebner
        if self.hilbert is not None:
            out["hilbert"] = self.hilbert
        if self.timings is not None:
            out["timings"] = self.timings
        if self.failure is not None:
            out["failure"] = self.failure
        return out


class _Clock:
    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.times: dict[str, float] = {}

    @contextmanager
    def stage(self, name: str):
        start = time.perf_counter()
        yield
        self.times[name] = round(time.perf_counter() - start, 6)

    def result(self) -> dict | None:
        return self.times if self.enabled else None


def _check_sizes(P: Poset, Q: Poset) -> None:
    if P.size != Q.size:
        raise SizeMismatch(f"|P| = {P.size} but |Q| = {Q.size}")


def run_delta(P: Poset, Q: Poset, cfg: RunConfig = RunConfig()) -> RunReport:
    _check_sizes(P, Q)
    clock = _Clock(cfg.timings)
    rep = RunReport(P.to_json(), Q.to_json(), cfg.kind.value)
    with clock.stage("hull"):
        poly = gamma(cfg.kind, P, Q)
        poly.hrep
    with clock.stage("ehrhart"):
        counts = ehrhart_counts(poly)
        delta = delta_vector(counts)
    rep.counts = list(counts.counts)
    rep.delta = list(delta.entries)
    rep.flags["delta_symmetric"] = delta.is_symmetric()
    rep.timings = clock.result()
    return rep


def groebner_stage(P: Poset, Q: Poset, cfg: RunConfig) -> tuple[dict, list]:
    """Buchberger check, initial-ideal profile, and Hilbert cross-check."""
    order = toric.build_order(P, Q, cfg.tie_break)
    G = toric.generators(P, Q)
    if cfg.corrupt:
        G = toric.corrupt(G, cfg.corrupt)
    report = toric.buchberger_check(G, order)
    profile = toric.initial_ideal_profile(G, order)
    summary = {
        "ok": report.ok,
        **report.summary(),
        "profile": profile,
        "star_empty": sum(g.star_empty for g in G),
    }
    poly = gamma(GammaKind.ORDER_MINUS_CHAIN, P, Q)
    hilbert = []
    for n in range(cfg.hilbert_depth + 1):
        lattice = 1 if n == 0 else count_lattice_points(poly, n)
        hilbert.append({
            "n": n,
            "standard_monomials": toric.standard_monomial_count(G, order, n),
            "oracle": toric.hilbert_oracle(P, Q, n),
            "lattice_points": lattice,
        })
    return summary, hilbert


def run_verify(P: Poset, Q: Poset, cfg: RunConfig = RunConfig()) -> RunReport:
    """Every check the corollary predicts; ``failure`` names the first miss."""
    rep = run_delta(P, Q, cfg)
    clock = _Clock(cfg.timings)
    if rep.timings:
        clock.times.update(rep.timings)
    poly = gamma(cfg.kind, P, Q)
    checks: list[tuple[str, bool]] = []

    if cfg.kind is GammaKind.ORDER_MINUS_CHAIN:
        with clock.stage("groebner"):
            summary, hilbert = groebner_stage(P, Q, cfg)
        rep.groebner, rep.hilbert = summary, hilbert
        profile = summary["profile"]
        checks += [
            ("groebner_basis", summary["ok"]),
            ("initial_quadratic", profile["quadratic"]),
            ("initial_squarefree", profile["squarefree"]),
            ("initial_z_free", profile["z_free"]),
            (
                "hilbert_agreement",
                all(
                    h["standard_monomials"] == h["oracle"] == h["lattice_points"]
                    for h in hilbert
                ),
            ),
        ]

    with clock.stage("properties"):
        fano = is_fano(poly)
        rep.flags["fano"] = fano
        checks.append(("fano", fano))
        if fano:
            integral = dual_is_integral(poly.hrep)
            rep.flags["dual_integral"] = integral
            checks.append(("dual_integral", integral))
            # consistency of the two Gorenstein criteria is asserted inside
            gor = is_gorenstein_fano(poly)
            rep.flags["gorenstein"] = gor
            checks.append(("gorenstein", gor))
        checks.append(("delta_symmetric", rep.flags["delta_symmetric"]))
        normal = is_normal_up_to(poly, cfg.nmax)
        rep.flags[f"normal_n{cfg.nmax}"] = normal
        checks.append((f"normal_n{cfg.nmax}", normal))

    rep.failure = next((name for name, ok in checks if not ok), None)
    rep.timings = clock.result()
    return rep


# ----------------------------------------------------------------------
# sweeps


def csv_columns(d: int) -> list[str]:
    return (
        ["posetP", "posetQ", "kind"]
        + [f"i{t}" for t in range(1, d + 1)]
        + [f"delta{i}" for i in range(d + 1)]
        + ["fano", "gorenstein", "normal_n3", "groebner_ok"]
    )


def _flag(value: bool | None) -> str:
    return "" if value is None else str(bool(value)).lower()


def sweep_row(args: tuple[Poset, Poset, SweepConfig]) -> dict:
    P, Q, cfg = args
    poly = gamma(cfg.kind, P, Q)
    counts = ehrhart_counts(poly)
    delta = delta_vector(counts)
    fano = is_fano(poly)
    gor = is_gorenstein_fano(poly) if fano else False
    normal = is_normal_up_to(poly, 3)
    groebner = None
    if cfg.groebner and cfg.kind is GammaKind.ORDER_MINUS_CHAIN:
        order = toric.build_order(P, Q)
        G = toric.generators(P, Q)
        profile = toric.initial_ideal_profile(G, order)
        groebner = toric.buchberger_verify(G, order) and all(profile.values())
    row = {"posetP": P.label(), "posetQ": Q.label(), "kind": cfg.kind.value}
    row.update({f"i{t}": c for t, c in enumerate(counts.counts, 1)})
    row.update({f"delta{i}": x for i, x in enumerate(delta.entries)})
    row.update({
        "fano": _flag(fano),
        "gorenstein": _flag(gor),
        "normal_n3": _flag(normal),
        "groebner_ok": _flag(groebner),
    })
    return row


def sweep_rows(
    cfg: SweepConfig,
    Ps: Sequence[Poset] | None = None,
    Qs: Sequence[Poset] | None = None,
) -> list[dict]:
    if cfg.d > cfg.max_d:
        raise ValueError(f"d = {cfg.d} exceeds the configured bound {cfg.max_d}")
    every = None
    if Ps is None or Qs is None:
        every = all_posets(cfg.d)
    Ps = every if Ps is None else Ps
    Qs = every if Qs is None else Qs
    for R in list(Ps) + list(Qs):
        if R.size != cfg.d:
            raise SizeMismatch(f"poset {R} does not have {cfg.d} elements")
    jobs = [(P, Q, cfg) for P in Ps for Q in Qs]
    if cfg.workers > 1:
        with Pool(cfg.workers) as pool:
            return pool.map(sweep_row, jobs, chunksize=16)
    return [sweep_row(j) for j in jobs]


def rows_to_csv(rows: Iterable[dict], d: int) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=csv_columns(d), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()
