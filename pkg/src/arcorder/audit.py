"""Trial runner that puts each ordering theorem to work on small graph corpora.

Every trial asks one direction of one claim about one graph under one
betweenness reading and files the answer as ``holds``, ``fails``,
``vacuous`` (the hypothesis is never met) or ``skipped-cap``.  Failures
carry a certificate that can be re-checked from the report alone.
"""

from __future__ import annotations

import hashlib
import logging
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .arcs import ArcModel, build_model, containment_witness, intersection_graph, serialize_model
from .graph import INF, Graph, canonical_form, diameter, enumerate_graphs, is_connected, power, random_graph, serialize_graph
from .ordering import Ordering, Reading, Violation, check_circular, check_proper_circular
from .oracles import MODEL_CAP, ORDERING_CAP, CapExceeded, RecognitionOutcome, find_arc_model, find_circular_ordering

log = logging.getLogger(__name__)

AUDIT_VERSION = 1

T1_FORWARD = "T1-forward"
T1_CONVERSE = "T1-converse"
T2_LEMMA = "T2-lemma"
T3_FORWARD = "T3-forward"
T3_CONVERSE = "T3-converse"
T4_LEMMA = "T4-lemma"
CLOSURE = "closure-observation"
THEOREMS = (T1_FORWARD, T1_CONVERSE, T2_LEMMA, T3_FORWARD, T3_CONVERSE, T4_LEMMA, CLOSURE)

HOLDS, FAILS, VACUOUS, SKIPPED = "holds", "fails", "vacuous", "skipped-cap"
OUTCOMES = (HOLDS, FAILS, VACUOUS, SKIPPED)


@dataclass(frozen=True)
class Certificate:
    graph_power: int = 1  # the cited ordering or model refers to power(g, graph_power)
    checker: str | None = None  # "circular" or "proper-circular"
    ordering: Ordering | None = None
    violation: Violation | None = None
    model: ArcModel | None = None
    mismatch: tuple[int, int] | None = None
    containment: tuple[int, int] | None = None
    searched: int | None = None

    def lines(self) -> list[str]:
        out = [f"power {self.graph_power}"]
        if self.checker:
            out.append(f"checker {self.checker}")
        if self.ordering is not None:
            out.append(f"ordering {self.ordering}")
        if self.violation is not None:
            out.append(self.violation.line())
        if self.model is not None:
            out.extend(serialize_model(self.model).splitlines())
        if self.mismatch is not None:
            u, v = self.mismatch
            out.append(f"mismatch u={u} v={v}")
        if self.containment is not None:
            inner, outer = self.containment
            out.append(f"containment inner={inner} outer={outer}")
        if self.searched is not None:
            out.append(f"searched {self.searched}")
        return out


@dataclass(frozen=True)
class TrialRecord:
    graph: str  # serialized graph
    reading: Reading
    theorem: str
    k: int | None
    outcome: str
    certificate: Certificate | None = None

    @property
    def graph_hash(self) -> str:
        return graph_hash(self.graph)

    def sort_key(self) -> tuple:
        return (self.graph, THEOREMS.index(self.theorem), self.k or 0, self.reading.value)

    def line(self) -> str:
        k = "-" if self.k is None else str(self.k)
        return f"t {self.graph_hash} {self.theorem} {k} {self.reading} {self.outcome}"


def graph_hash(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:12]


@dataclass(frozen=True)
class AuditConfig:
    n0: int = 5
    trials: int = 100
    seed: int = 20231017
    readings: tuple[Reading, ...] = (Reading.CYCLIC, Reading.LINEAR)
    order_cap: int = ORDERING_CAP
    model_cap: int = MODEL_CAP
    random_n_min: int = 3
    random_n_max: int = 9
    random_p: tuple[float, ...] = (0.3, 0.5, 0.7)
    max_k: int = 4

    def echo(self) -> list[tuple[str, str]]:
        items = {
            "n0": str(self.n0),
            "trials": str(self.trials),
            "seed": str(self.seed),
            "readings": ",".join(r.value for r in self.readings),
            "order-cap": str(self.order_cap),
            "model-cap": str(self.model_cap),
            "random-n-min": str(self.random_n_min),
            "random-n-max": str(self.random_n_max),
            "random-p": ",".join(f"{p:g}" for p in self.random_p),
            "max-k": str(self.max_k),
        }
        return sorted(items.items())


# --- cached oracle calls ---------------------------------------------------


@lru_cache(maxsize=None)
def _ordering(g: Graph, reading: Reading, proper: bool, cap: int) -> RecognitionOutcome:
    return find_circular_ordering(g, reading, proper, max_n=cap)


@lru_cache(maxsize=None)
def _model(g: Graph, proper: bool, cap: int) -> RecognitionOutcome:
    return find_arc_model(g, proper, max_n=cap)


def _checker(proper: bool):
    return check_proper_circular if proper else check_circular


def _first_mismatch(g: Graph, h: Graph) -> tuple[int, int] | None:
    for u in g.vertices:
        for v in range(u + 1, g.n + 1):
            if g.has_edge(u, v) != h.has_edge(u, v):
                return u, v
    return None


def power_range(g: Graph, max_k: int = 4) -> range:
    d = diameter(g)
    top = max_k if d == INF else min(int(d), max_k)
    return range(1, max(top, 1) + 1)


# --- trials ----------------------------------------------------------------


def _forward(g: Graph, reading: Reading, proper: bool, cfg: AuditConfig) -> TrialRecord:
    name = T3_FORWARD if proper else T1_FORWARD
    text = serialize_graph(g)
    try:
        model = _model(g, proper, cfg.model_cap)
        if not model.found:
            return TrialRecord(text, reading, name, None, VACUOUS)
        order = _ordering(g, reading, proper, cfg.order_cap)
    except CapExceeded:
        return TrialRecord(text, reading, name, None, SKIPPED)
    if order.found:
        return TrialRecord(text, reading, name, None, HOLDS)
    cert = Certificate(checker=_checker_name(proper), model=model.witness, searched=order.searched)
    return TrialRecord(text, reading, name, None, FAILS, cert)


def _converse(g: Graph, reading: Reading, proper: bool, cfg: AuditConfig) -> TrialRecord:
    name = T3_CONVERSE if proper else T1_CONVERSE
    text = serialize_graph(g)
    try:
        order = _ordering(g, reading, proper, cfg.order_cap)
    except CapExceeded:
        return TrialRecord(text, reading, name, None, SKIPPED)
    if not order.found:
        return TrialRecord(text, reading, name, None, VACUOUS)
    sigma = order.witness
    built = build_model(g, sigma)
    miss = _first_mismatch(g, intersection_graph(built))
    if miss is not None:
        cert = Certificate(checker=_checker_name(proper), ordering=sigma, model=built, mismatch=miss)
        return TrialRecord(text, reading, name, None, FAILS, cert)
    if proper:
        inside = containment_witness(built)
        if inside is not None:
            cert = Certificate(checker=_checker_name(proper), ordering=sigma, model=built, containment=inside)
            return TrialRecord(text, reading, name, None, FAILS, cert)
    return TrialRecord(text, reading, name, None, HOLDS)


def _checker_name(proper: bool) -> str:
    return "proper-circular" if proper else "circular"


def trial_theorem1(g: Graph, reading: Reading, cfg: AuditConfig = AuditConfig()) -> tuple[TrialRecord, TrialRecord]:
    """Forward: a model exists => an ordering exists.  Converse: the built model realises g."""
    return _forward(g, reading, False, cfg), _converse(g, reading, False, cfg)


def trial_theorem3(g: Graph, reading: Reading, cfg: AuditConfig = AuditConfig()) -> tuple[TrialRecord, TrialRecord]:
    """Proper analogue of :func:`trial_theorem1`; the converse also demands a proper model."""
    return _forward(g, reading, True, cfg), _converse(g, reading, True, cfg)


def _persistence(g: Graph, k: int, reading: Reading, proper: bool, cfg: AuditConfig) -> TrialRecord:
    name = T4_LEMMA if proper else T2_LEMMA
    text = serialize_graph(g)
    try:
        order = _ordering(power(g, k), reading, proper, cfg.order_cap)
    except CapExceeded:
        return TrialRecord(text, reading, name, k, SKIPPED)
    if not order.found:
        return TrialRecord(text, reading, name, k, VACUOUS)
    v = _checker(proper)(power(g, k + 1), order.witness, reading)
    if v is None:
        return TrialRecord(text, reading, name, k, HOLDS)
    cert = Certificate(graph_power=k + 1, checker=_checker_name(proper), ordering=order.witness, violation=v)
    return TrialRecord(text, reading, name, k, FAILS, cert)


def trial_theorem2(g: Graph, k: int, reading: Reading, cfg: AuditConfig = AuditConfig()) -> TrialRecord:
    """An ordering accepted for g^k must still be accepted for g^(k+1)."""
    return _persistence(g, k, reading, False, cfg)


def trial_theorem4(g: Graph, k: int, reading: Reading, cfg: AuditConfig = AuditConfig()) -> TrialRecord:
    return _persistence(g, k, reading, True, cfg)


def trial_closure(g: Graph, k: int, reading: Reading, cfg: AuditConfig = AuditConfig()) -> TrialRecord:
    """An ordering accepted for g (plain and proper variants) stays accepted for g^k."""
    text = serialize_graph(g)
    met = False
    for proper in (False, True):
        try:
            order = _ordering(g, reading, proper, cfg.order_cap)
        except CapExceeded:
            return TrialRecord(text, reading, CLOSURE, k, SKIPPED)
        if not order.found:
            continue
        met = True
        v = _checker(proper)(power(g, k), order.witness, reading)
        if v is not None:
            cert = Certificate(graph_power=k, checker=_checker_name(proper), ordering=order.witness, violation=v)
            return TrialRecord(text, reading, CLOSURE, k, FAILS, cert)
    return TrialRecord(text, reading, CLOSURE, k, HOLDS if met else VACUOUS)


def run_trial(g: Graph, theorem: str, reading: Reading, k: int | None = None,
              cfg: AuditConfig = AuditConfig()) -> TrialRecord:
    if theorem in (T1_FORWARD, T3_FORWARD):
        return _forward(g, reading, theorem == T3_FORWARD, cfg)
    if theorem in (T1_CONVERSE, T3_CONVERSE):
        return _converse(g, reading, theorem == T3_CONVERSE, cfg)
    if k is None:
        raise ValueError(f"{theorem} needs a power k")
    if theorem == T2_LEMMA:
        return trial_theorem2(g, k, reading, cfg)
    if theorem == T4_LEMMA:
        return trial_theorem4(g, k, reading, cfg)
    if theorem == CLOSURE:
        return trial_closure(g, k, reading, cfg)
    raise ValueError(f"unknown theorem {theorem!r}")


def minimize_counterexample(g: Graph, theorem: str, reading: Reading, k: int | None = None,
                            cfg: AuditConfig = AuditConfig()) -> Graph:
    """Delete vertices (highest id first) while the trial keeps failing."""
    if run_trial(g, theorem, reading, k, cfg).outcome != FAILS:
        raise ValueError(f"{theorem} does not fail on the given graph")
    shrunk = True
    while shrunk and g.n > 1:
        shrunk = False
        for v in range(g.n, 0, -1):
            h = g.induced(u for u in g.vertices if u != v)
            if run_trial(h, theorem, reading, k, cfg).outcome == FAILS:
                g, shrunk = h, True
                break
    return g


# --- whole campaign --------------------------------------------------------


@dataclass(frozen=True)
class ModelRow:
    """Raw model-oracle answers for g^k and g^(k+1), plain and proper."""

    graph: str
    k: int
    ca: tuple[bool, bool]
    pca: tuple[bool, bool]

    def line(self) -> str:
        b = lambda x: "1" if x else "0"  # noqa: E731
        return f"m {graph_hash(self.graph)} {self.k} ca {b(self.ca[0])} {b(self.ca[1])} pca {b(self.pca[0])} {b(self.pca[1])}"


@dataclass
class AuditReport:
    config: AuditConfig
    records: list[TrialRecord]
    model_rows: list[ModelRow]
    agreement: dict[tuple[Reading, str], Counter]
    corpus: list[tuple[str, str]] = field(default_factory=list)

    def tallies(self) -> dict[tuple[str, Reading], Counter]:
        out: dict[tuple[str, Reading], Counter] = {}
        for r in self.records:
            out.setdefault((r.theorem, r.reading), Counter())[r.outcome] += 1
        return out

    def failures(self) -> list[TrialRecord]:
        return [r for r in self.records if r.outcome == FAILS]

    def render(self) -> str:
        lines = [f"audit-version {AUDIT_VERSION}"]
        lines += [f"cfg {key} {value}" for key, value in self.config.echo()]
        lines += [r.line() for r in self.records]
        lines += [row.line() for row in self.model_rows]
        lines += [f"corpus {key} {value}" for key, value in self.corpus]
        tallies = self.tallies()
        for theorem in THEOREMS:
            for reading in self.config.readings:
                c = tallies.get((theorem, reading), Counter())
                counts = " ".join(f"{o}={c[o]}" for o in OUTCOMES)
                lines.append(f"tally {theorem} {reading} {counts} total={sum(c.values())}")
        for reading in self.config.readings:
            for cls in ("ca", "pca"):
                c = self.agreement.get((reading, cls), Counter())
                keys = ("both", "model-only", "ordering-only", "neither", "skipped")
                lines.append(f"agree {reading} {cls} " + " ".join(f"{key}={c[key]}" for key in keys))
        for r in self.failures():
            k = "-" if r.k is None else str(r.k)
            lines.append(f"certificate {r.graph_hash} {r.theorem} {k} {r.reading}")
            body = r.graph.splitlines() + r.certificate.lines()
            lines += ["  " + b for b in body]
        return "\n".join(lines) + "\n"


def build_corpus(cfg: AuditConfig) -> tuple[list[Graph], list[Graph]]:
    exhaustive = [g for n in range(1, cfg.n0 + 1) for g in enumerate_graphs(n, connected_only=True, cap=max(cfg.n0, 1))]
    rng = random.Random(cfg.seed)
    sampled = []
    for _ in range(cfg.trials):
        n = rng.randint(cfg.random_n_min, cfg.random_n_max)
        p = rng.choice(cfg.random_p)
        sampled.append(random_graph(n, p, rng.getrandbits(64)))
    return exhaustive, sampled


def _agreement_key(order_found: bool, model_found: bool) -> str:
    if order_found and model_found:
        return "both"
    if model_found:
        return "model-only"
    if order_found:
        return "ordering-only"
    return "neither"


def _graph_job(args: tuple[Graph, AuditConfig, bool]):
    g, cfg, tally_agreement = args
    records: list[TrialRecord] = []
    agreement: list[tuple[Reading, str, str]] = []
    ks = power_range(g, cfg.max_k)
    for reading in cfg.readings:
        records.extend(trial_theorem1(g, reading, cfg))
        records.extend(trial_theorem3(g, reading, cfg))
        for k in ks:
            records.append(trial_theorem2(g, k, reading, cfg))
            records.append(trial_theorem4(g, k, reading, cfg))
            records.append(trial_closure(g, k, reading, cfg))
        if tally_agreement:
            for proper, cls in ((False, "ca"), (True, "pca")):
                try:
                    key = _agreement_key(
                        _ordering(g, reading, proper, cfg.order_cap).found,
                        _model(g, proper, cfg.model_cap).found,
                    )
                except CapExceeded:
                    key = "skipped"
                agreement.append((reading, cls, key))
    rows: list[ModelRow] = []
    if g.n <= cfg.model_cap:
        text = serialize_graph(g)
        for k in ks:
            lo, hi = power(g, k), power(g, k + 1)
            rows.append(ModelRow(
                text, k,
                (_model(lo, False, cfg.model_cap).found, _model(hi, False, cfg.model_cap).found),
                (_model(lo, True, cfg.model_cap).found, _model(hi, True, cfg.model_cap).found),
            ))
    return records, agreement, rows


def clear_caches() -> None:
    _ordering.cache_clear()
    _model.cache_clear()


def run_audit(cfg: AuditConfig = AuditConfig(), workers: int = 1) -> AuditReport:
    clear_caches()
    exhaustive, sampled = build_corpus(cfg)
    exhaustive_keys = {serialize_graph(g) for g in exhaustive}
    unique: dict[str, Graph] = {}
    for g in exhaustive + sampled:
        unique.setdefault(serialize_graph(g), g)
    jobs = [(g, cfg, text in exhaustive_keys) for text, g in sorted(unique.items())]
    log.info("auditing %d graphs with %d worker(s)", len(jobs), workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_graph_job, jobs, chunksize=8))
    else:
        results = [_graph_job(job) for job in jobs]

    records: list[TrialRecord] = []
    rows: list[ModelRow] = []
    agreement: dict[tuple[Reading, str], Counter] = {}
    for recs, agree, model_rows in results:
        records.extend(recs)
        rows.extend(model_rows)
        for reading, cls, key in agree:
            agreement.setdefault((reading, cls), Counter())[key] += 1
    records.sort(key=TrialRecord.sort_key)
    rows.sort(key=lambda row: (row.graph, row.k))

    classes = len({canonical_form(g) for g in exhaustive})
    corpus = [
        ("exhaustive-connected", f"{len(exhaustive)} classes={classes} n<={cfg.n0}"),
        ("random", f"{len(sampled)} new={len(unique) - len(exhaustive)} connected={sum(map(is_connected, sampled))}"),
    ]
    return AuditReport(cfg, records, rows, agreement, corpus)


def asserted_failures(report: AuditReport) -> list[TrialRecord]:
    """Failures in the categories expected to be clean: persistence lemmas and cyclic realisation."""
    return [
        r for r in report.failures()
        if r.theorem in (T2_LEMMA, T4_LEMMA) or (r.theorem == T1_CONVERSE and r.reading is Reading.CYCLIC)
    ]


def iter_certificate_blocks(text: str) -> Iterable[tuple[list[str], list[str]]]:
    """Yield ``(header_tokens, body_lines)`` for each certificate block of a rendered report."""
    header: list[str] | None = None
    body: list[str] = []
    for line in text.splitlines():
        if line.startswith("certificate "):
            if header is not None:
                yield header, body
            header, body = line.split()[1:], []
        elif header is not None and line.startswith("  "):
            body.append(line[2:])
    if header is not None:
        yield header, body
