"""Exhaustive, pruned, symmetry-reduced search over colorings of sub-domains of B_n.

Elements are assigned in (cardinality, mask) order, so a freshly colored set
is maximal among the colored ones and any new forbidden copy must use it as
the image of a maximal pattern element.  The first ``symmetry_depth`` levels
form a prefix; prefixes that are not lexicographically least in their orbit
under (domain stabilizer) x (color renaming, when allowed) are dropped, and
the survivors are the independent subtree tasks handed to workers.
"""
from __future__ import annotations

import json
import logging
import multiprocessing
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from functools import lru_cache
from itertools import combinations
from typing import Callable, Optional, Sequence

from .checker import Target, as_targets, find_monochromatic, find_monochromatic_any, find_rainbow
from .constructions import ABSENT, Coloring
from .errors import InvalidArguments, MalformedInput, NotFoundWithinBound, SearchInconclusive
from .lattice import (MAX_EXHAUSTIVE_GROUND, Domain, all_permutations, apply_permutation,
                      full_set, lattice_tables, level_order, size)
from .poset import STRONG, Poset, _plan, make_v

log = logging.getLogger(__name__)

WITNESS, EXHAUSTED, INCONCLUSIVE = "witness", "exhausted", "inconclusive"
WORKERS_ENV = "VRAMSEY_WORKERS"


class UndecidedWithinBound(NotFoundWithinBound):
    pass


@dataclass(frozen=True)
class SearchConfig:
    node_budget: Optional[int] = None
    symmetry_depth: int = 2
    workers: int = 1
    color_symmetry: str = "auto"  # auto | on | off

    def __post_init__(self):
        if self.color_symmetry not in ("auto", "on", "off"):
            raise InvalidArguments(f"color_symmetry must be auto, on or off, not {self.color_symmetry!r}")
        if self.symmetry_depth < 0 or self.workers < 1:
            raise InvalidArguments("symmetry_depth >= 0 and workers >= 1 required")

    @classmethod
    def plain(cls, **kw) -> "SearchConfig":
        """No orbit pruning and no color renaming."""
        return cls(symmetry_depth=0, color_symmetry="off", **kw)

    @classmethod
    def from_env(cls, **kw) -> "SearchConfig":
        if "workers" not in kw and os.environ.get(WORKERS_ENV):
            kw["workers"] = int(os.environ[WORKERS_ENV])
        return cls(**kw)


@dataclass
class SearchCertificate:
    kind: str  # "coloring" or "partition"
    domain: Domain
    targets: list[Target]
    k: Optional[int]
    rainbow: Optional[Poset]
    outcome: str
    nodes_visited: int
    symmetry: dict
    config: SearchConfig
    witness: Optional[Coloring] = None
    elapsed: float = 0.0

    @property
    def exhausted(self) -> bool:
        return self.outcome == EXHAUSTED

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "domain": self.domain.to_json(),
            "k": self.k,
            "targets": [t.to_json() for t in self.targets],
            "rainbow": None if self.rainbow is None else Target(self.rainbow).to_json(),
            "config": asdict(self.config),
            "outcome": self.outcome,
            "nodes_visited": self.nodes_visited,
            "symmetry": self.symmetry,
            "witness": None if self.witness is None else self.witness.to_json(),
            "metadata": {"elapsed_seconds": round(self.elapsed, 6)},
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "SearchCertificate":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise MalformedInput(str(exc)) from exc
        try:
            rainbow = data.get("rainbow")
            return cls(
                kind=data["kind"],
                domain=Domain.from_json(data["domain"]),
                targets=[Target.from_json(t) for t in data["targets"]],
                k=data.get("k"),
                rainbow=None if rainbow is None else Target.from_json(rainbow).poset,
                outcome=data["outcome"],
                nodes_visited=int(data["nodes_visited"]),
                symmetry=data.get("symmetry", {}),
                config=SearchConfig(**data.get("config", {})),
                witness=None if data.get("witness") is None else Coloring.from_json(data["witness"]),
                elapsed=data.get("metadata", {}).get("elapsed_seconds", 0.0),
            )
        except (KeyError, TypeError, AttributeError) as exc:
            raise MalformedInput(f"bad certificate JSON: {exc}") from exc


# --- pinned copy detection ---------------------------------------------------------

def _pinned_matcher(P: Poset, mode: str, n: int, pins: Sequence[int], rainbow: bool = False):
    """``has(S, x[, colors, classes])``: does S contain a copy of P using x as some pin?"""
    t = lattice_tables(n)
    up, down, comp = t.up, t.down, t.comparable
    plans = [_plan(P, mode, p)[1] for p in pins]
    size_ = P.size

    if not rainbow:
        def has(S: int, x: int) -> bool:
            if size_ == 1:
                return True
            for steps in plans:
                imgs = [x]

                def rec(pos):
                    if pos == size_:
                        return True
                    cand = S
                    for j, rel in steps[pos]:
                        y = imgs[j]
                        if rel == 0:
                            cand &= up[y]
                        elif rel == 1:
                            cand &= down[y]
                        elif rel == 2:
                            cand &= ~comp[y]
                        else:
                            cand &= ~(1 << y)
                    while cand:
                        low = cand & -cand
                        imgs.append(low.bit_length() - 1)
                        if rec(pos + 1):
                            return True
                        imgs.pop()
                        cand ^= low
                    return False

                if rec(1):
                    return True
            return False
        return has

    def has_rainbow(S: int, x: int, colors: Sequence[int], classes: Sequence[int]) -> bool:
        if size_ == 1:
            return True
        for steps in plans:
            imgs = [x]

            def rec(pos, used):
                if pos == size_:
                    return True
                cand = S & ~used
                for j, rel in steps[pos]:
                    y = imgs[j]
                    if rel == 0:
                        cand &= up[y]
                    elif rel == 1:
                        cand &= down[y]
                    elif rel == 2:
                        cand &= ~comp[y]
                    else:
                        cand &= ~(1 << y)
                while cand:
                    low = cand & -cand
                    y = low.bit_length() - 1
                    imgs.append(y)
                    if rec(pos + 1, used | classes[colors[y]]):
                        return True
                    imgs.pop()
                    cand ^= low
                return False

            if rec(1, classes[colors[x]]):
                return True
        return False
    return has_rainbow


# --- the engine -----------------------------------------------------------------------

class _Engine:
    """Search state shared by the frontier phase and the subtree tasks."""

    def __init__(self, domain: Domain, k: Optional[int], targets: list[Target],
                 rainbow: Optional[Poset], cfg: SearchConfig):
        self.domain = domain
        self.k = k
        self.targets = targets
        self.rainbow = rainbow
        self.cfg = cfg
        self.order = domain.elements()
        n = domain.n
        if k is not None:
            # coloring mode: color i forbids target i
            self.mono = [_pinned_matcher(t.poset, t.mode, n, t.poset.maximal_elements())
                         for t in targets]
            identical = len({(t.poset, t.mode) for t in targets}) == 1
            self.color_sym = cfg.color_symmetry == "on" or (cfg.color_symmetry == "auto" and identical)
        else:
            # partition mode: one pattern forbidden in every color, plus a rainbow pattern
            P = targets[0]
            self.mono_any = _pinned_matcher(P.poset, P.mode, n, P.poset.maximal_elements())
            self.rainbow_has = _pinned_matcher(rainbow, STRONG, n, rainbow.maximal_elements(), rainbow=True)
            self.color_sym = True
        sizes = sorted({size(x) for x in self.order})[:cfg.symmetry_depth]
        self.prefix_len = sum(1 for x in self.order if size(x) in sizes)
        self.group = self._group() if cfg.symmetry_depth else []

    def _group(self) -> list[tuple[int, ...]]:
        if self.domain.n > MAX_EXHAUSTIVE_GROUND:
            raise InvalidArguments("symmetry reduction needs n <= 6")
        removed = self.domain.removed
        out = []
        for g in all_permutations(self.domain.n)[1:]:
            if all(apply_permutation(x, g) in removed for x in removed):
                out.append(tuple(apply_permutation(x, g) for x in range(1 << self.domain.n)))
        return out

    def symmetry_report(self) -> dict:
        return {
            "orbit_levels": self.cfg.symmetry_depth,
            "prefix_elements": self.prefix_len,
            "group_order": len(self.group) + 1,
            "color_symmetry": self.color_sym,
        }

    def _normalized(self, seq: Sequence[int]) -> tuple[int, ...]:
        if not self.color_sym:
            return tuple(seq)
        rename: dict[int, int] = {}
        return tuple(rename.setdefault(c, len(rename) + 1) for c in seq)

    def prefix_is_canonical(self, colors: Sequence[int]) -> bool:
        prefix = self.order[:self.prefix_len]
        mine = tuple(colors[x] for x in prefix)
        for g in self.group:
            if self._normalized([colors[g[x]] for x in prefix]) < mine:
                return False
        return True

    def new_state(self):
        N = 1 << self.domain.n
        return [ABSENT] * N, [0] * ((self.k or len(self.order)) + 1)

    def run(self, pos: int, stop: int, colors: list[int], classes: list[int], used: int,
            budget: Optional[int], on_leaf: Callable[[list[int]], bool],
            cancelled: Callable[[], bool] = lambda: False) -> tuple[bool, int, bool]:
        """DFS from ``pos``; ``on_leaf`` returns True to stop.  -> (stopped, nodes, budget_hit)."""
        order = self.order
        k = self.k
        color_sym = self.color_sym
        nodes = 0
        budget_hit = False
        partition = k is None

        def rec(pos: int, used: int) -> bool:
            nonlocal nodes, budget_hit
            nodes += 1
            if budget is not None and nodes > budget:
                budget_hit = True
                return True
            if pos == stop:
                return on_leaf(colors)
            if nodes & 0x3FF == 0 and cancelled():
                return True
            x = order[pos]
            bit = 1 << x
            limit = used + 1 if (color_sym or partition) else k
            if k is not None:
                limit = min(limit, k)
            for c in range(1, limit + 1):
                colors[x] = c
                classes[c] |= bit
                if partition:
                    bad = self.mono_any(classes[c], x) or self.rainbow_has(
                        self._assigned(classes, used if c <= used else c), x, colors, classes)
                else:
                    bad = self.mono[c - 1](classes[c], x)
                if not bad and rec(pos + 1, max(used, c)):
                    return True
                classes[c] &= ~bit
                colors[x] = ABSENT
            return False

        stopped = rec(pos, used)
        return stopped, nodes, budget_hit

    @staticmethod
    def _assigned(classes: list[int], used: int) -> int:
        bits = 0
        for c in range(1, used + 1):
            bits |= classes[c]
        return bits


def _validate(domain: Domain):
    if domain.n > MAX_EXHAUSTIVE_GROUND:
        raise InvalidArguments(f"exhaustive search needs n <= {MAX_EXHAUSTIVE_GROUND}")


def _frontier(engine: _Engine, budget: Optional[int]) -> tuple[list[list[int]], int, bool]:
    """Canonical colorings of the prefix that survive pruning."""
    colors, classes = engine.new_state()
    found: list[list[int]] = []

    def leaf(cols):
        if engine.prefix_is_canonical(cols):
            found.append(list(cols))
        return False

    _, nodes, hit = engine.run(0, engine.prefix_len, colors, classes, 0, budget, leaf)
    return found, nodes, hit


def _state_from_prefix(engine: _Engine, prefix: list[int]):
    colors = list(prefix)
    _, classes = engine.new_state()
    used = 0
    for x, c in enumerate(colors):
        if c:
            classes[c] |= 1 << x
            used = max(used, c)
    return colors, classes, used


def _run_task(engine: _Engine, prefix: list[int], budget: Optional[int],
              cancelled: Callable[[], bool] = lambda: False):
    colors, classes, used = _state_from_prefix(engine, prefix)
    result: list[list[int]] = []

    def leaf(cols):
        result.append(list(cols))
        return True

    _, nodes, hit = engine.run(engine.prefix_len, len(engine.order), colors, classes, used,
                               budget, leaf, cancelled)
    return (result[0] if result else None), nodes - 1, hit  # the task root is the frontier leaf


# Worker-process plumbing: engines are rebuilt per process from picklable specs.
_WORKER_FLAG = None


def _worker_init(flag):
    global _WORKER_FLAG
    _WORKER_FLAG = flag


@lru_cache(maxsize=8)
def _engine_for(payload: str) -> _Engine:
    data = json.loads(payload)
    rainbow = None if data["rainbow"] is None else Target.from_json(data["rainbow"]).poset
    return _Engine(Domain.from_json(data["domain"]), data["k"],
                   [Target.from_json(t) for t in data["targets"]], rainbow,
                   SearchConfig(**data["config"]))


def _worker_task(payload: str, index: int, prefix: list[int], budget: Optional[int]):
    engine = _engine_for(payload)

    def cancelled():
        return _WORKER_FLAG is not None and 0 <= _WORKER_FLAG.value < index

    return _run_task(engine, prefix, budget, cancelled)


def _search(domain: Domain, k: Optional[int], targets: list[Target], rainbow: Optional[Poset],
            cfg: SearchConfig) -> SearchCertificate:
    _validate(domain)
    start = time.perf_counter()
    engine = _Engine(domain, k, targets, rainbow, cfg)
    kind = "coloring" if k is not None else "partition"

    def certificate(outcome, nodes, colors=None):
        witness = None
        if colors is not None:
            witness = Coloring(domain, tuple(colors), k)
        return SearchCertificate(kind, domain, targets, k, rainbow, outcome, nodes,
                                 engine.symmetry_report(), cfg, witness,
                                 time.perf_counter() - start)

    budget = cfg.node_budget
    prefixes, nodes, hit = _frontier(engine, budget)
    if hit:
        return certificate(INCONCLUSIVE, budget)
    if engine.prefix_len == len(engine.order):
        # the whole domain is the prefix: any canonical survivor is a good coloring
        return certificate(WITNESS, nodes, prefixes[0]) if prefixes else certificate(EXHAUSTED, nodes)

    remaining = None if budget is None else budget - nodes
    log.info("%s: %d frontier tasks after %d nodes", domain, len(prefixes), nodes)
    if cfg.workers > 1 and len(prefixes) > 1:
        results = _run_parallel(engine, prefixes, remaining)
    else:
        results = _run_serial(engine, prefixes, remaining)

    total = nodes
    for colors, task_nodes, task_hit in results:
        total += task_nodes
        if task_hit or (budget is not None and total > budget):
            return certificate(INCONCLUSIVE, budget)
        if colors is not None:
            return certificate(WITNESS, total, colors)
    return certificate(EXHAUSTED, total)


def _run_serial(engine, prefixes, remaining):
    out = []
    for prefix in prefixes:
        res = _run_task(engine, prefix, remaining)
        out.append(res)
        if remaining is not None:
            remaining -= res[1]
        if res[0] is not None or res[2] or (remaining is not None and remaining < 0):
            break
    return out


def _run_parallel(engine, prefixes, remaining):
    payload = json.dumps({
        "domain": engine.domain.to_json(), "k": engine.k,
        "targets": [t.to_json() for t in engine.targets],
        "rainbow": None if engine.rainbow is None else Target(engine.rainbow).to_json(),
        "config": asdict(engine.cfg),
    })
    ctx = multiprocessing.get_context("fork" if "fork" in multiprocessing.get_all_start_methods() else "spawn")
    flag = ctx.Value("i", -1)
    out = []
    with ProcessPoolExecutor(engine.cfg.workers, mp_context=ctx, initializer=_worker_init,
                             initargs=(flag,)) as pool:
        futures = [pool.submit(_worker_task, payload, i, p, remaining) for i, p in enumerate(prefixes)]
        for i, fut in enumerate(futures):
            res = fut.result()
            out.append(res)
            if res[0] is not None or res[2]:
                with flag.get_lock():
                    if flag.value < 0 or i < flag.value:
                        flag.value = i
                for later in futures[i + 1:]:
                    later.cancel()
                break
    return out


# --- public operations --------------------------------------------------------------

def find_good_coloring(D: Domain, k: int, T: Sequence[Poset | Target],
                       cfg: SearchConfig = SearchConfig()) -> SearchCertificate:
    """Search k-colorings of D with no copy of target i in color i."""
    targets = as_targets(T)
    if len(targets) != k:
        raise InvalidArguments(f"{len(targets)} targets for {k} colors")
    cert = _search(D, k, targets, None, cfg)
    if cert.witness is not None:
        assert find_monochromatic(cert.witness, targets) is None, "search produced a bad witness"
    return cert


def find_good_partition_coloring(D: Domain, P: Poset | Target, Q: Poset,
                                 cfg: SearchConfig = SearchConfig()) -> SearchCertificate:
    """Colorings with any number of colors avoiding a monochromatic P and a rainbow antichain Q."""
    if Q.size < 1 or any(Q.above):
        raise InvalidArguments("the rainbow pattern must be an antichain A_k")
    target = as_targets([P])[0]
    cert = _search(D, None, [target], Q, cfg)
    if cert.witness is not None:
        w = cert.witness
        assert find_monochromatic_any(w, target.poset, target.mode) is None
        assert find_rainbow(w, Q) is None
    return cert


@dataclass
class RamseyResult:
    value: int
    lower: Optional[SearchCertificate]  # witness at value - 1
    upper: SearchCertificate  # exhaustion at value

    def to_json(self) -> dict:
        return {"value": self.value,
                "lower": None if self.lower is None else self.lower.to_json(),
                "upper": self.upper.to_json()}


def _raise_inconclusive(cert: SearchCertificate):
    raise SearchInconclusive(f"node budget exhausted on {cert.domain}", cert)


def ramsey_certificates(T: Sequence[Poset | Target], n_max: int = MAX_EXHAUSTIVE_GROUND,
                        cfg: SearchConfig = SearchConfig(), n_min: int = 0) -> RamseyResult:
    targets = as_targets(T)
    lower = None
    for n in range(n_min, n_max + 1):
        cert = find_good_coloring(Domain.full(n), len(targets), targets, cfg)
        if cert.outcome == INCONCLUSIVE:
            _raise_inconclusive(cert)
        if cert.outcome == EXHAUSTED:
            if lower is not None and find_monochromatic(lower.witness, targets) is not None:
                raise AssertionError("lower-bound witness failed re-verification")
            return RamseyResult(n, lower, cert)
        lower = cert
    raise UndecidedWithinBound(f"every B_n with n <= {n_max} has a good coloring")


def compute_ramsey(T: Sequence[Poset | Target], n_max: int = MAX_EXHAUSTIVE_GROUND,
                   cfg: SearchConfig = SearchConfig()) -> int:
    """Least n such that every |T|-coloring of B_n has target i in color i."""
    return ramsey_certificates(T, n_max, cfg).value


def rainbow_certificates(P: Poset | Target, Q: Poset, n_max: int = MAX_EXHAUSTIVE_GROUND,
                         cfg: SearchConfig = SearchConfig()) -> RamseyResult:
    lower = None
    for n in range(n_max + 1):
        cert = find_good_partition_coloring(Domain.full(n), P, Q, cfg)
        if cert.outcome == INCONCLUSIVE:
            _raise_inconclusive(cert)
        if cert.outcome == EXHAUSTED:
            return RamseyResult(n, lower, cert)
        lower = cert
    raise UndecidedWithinBound(f"every B_n with n <= {n_max} has a good coloring")


def compute_rainbow_ramsey(P: Poset | Target, Q: Poset, n_max: int = MAX_EXHAUSTIVE_GROUND,
                           cfg: SearchConfig = SearchConfig()) -> int:
    """Least n such that every coloring of B_n has a monochromatic P or a rainbow Q."""
    return rainbow_certificates(P, Q, n_max, cfg).value


def is_ramsey_domain(D: Domain, T: Sequence[Poset | Target], cfg: SearchConfig = SearchConfig()) -> bool:
    cert = find_good_coloring(D, len(T), T, cfg)
    if cert.outcome == INCONCLUSIVE:
        _raise_inconclusive(cert)
    return cert.outcome == EXHAUSTED


def is_minimal_ramsey(D: Domain, T: Sequence[Poset | Target], cfg: SearchConfig = SearchConfig()) -> bool:
    """Ramsey, and deleting any single element destroys the property."""
    if not is_ramsey_domain(D, T, cfg):
        return False
    return not any(is_ramsey_domain(D.without(e), T, cfg) for e in D.elements())


def enumerate_minimal_ramsey(n: int, T: Sequence[Poset | Target], cfg: SearchConfig = SearchConfig(),
                             max_removed: int = 4) -> list[Domain]:
    """Minimal Ramsey domains B_n - R with |R| <= max_removed, one per ground-permutation orbit."""
    if n > 4:
        raise InvalidArguments("full minimal-Ramsey enumeration is limited to n <= 4")
    targets = as_targets(T)
    verdict: dict[Domain, bool] = {}

    def ramsey(D: Domain) -> bool:
        key = D.canonical()
        if key not in verdict:
            verdict[key] = is_ramsey_domain(key, targets, cfg)
        return verdict[key]

    found: list[Domain] = []
    seen: set[Domain] = set()
    for r in range(max_removed + 1):
        for removed in combinations(range(1 << n), r):
            D = Domain(n, frozenset(removed)).canonical()
            if D in seen:
                continue
            seen.add(D)
            # removing more from a non-Ramsey domain cannot make it Ramsey
            if any(verdict.get(Domain(n, D.removed - {x}).canonical()) is False for x in D.removed):
                verdict[D] = False
                continue
            if not ramsey(D):
                continue
            if not any(ramsey(D.without(e)) for e in D.elements()):
                found.append(D)
    return sorted(found, key=lambda d: (len(d.removed), level_order(d.removed)))


# --- lemma and conjecture checks ------------------------------------------------------

@dataclass
class LemmaReport:
    holds: bool
    colorings_covered: int
    pruned_by_conclusion: int
    good_colorings: int
    hypothesis_colorings: int = 0
    counterexamples: list[Coloring] = field(default_factory=list)


def vmn_lemma_report(m: int, n: int) -> LemmaReport:
    """Every 2-coloring of B_{m+n+1} with c([N]-{i}) = c({}) for some i has V(m,m) in color 1 or V(n,n) in color 2.

    Colorings are enumerated by a pruned DFS: once a partial coloring holds
    one of the two patterns, all completions satisfy the conclusion and are
    counted in bulk.  Completions avoiding both are tested against the hypothesis.
    """
    N = m + n + 1
    if N > 5:
        raise InvalidArguments("lemma check limited to m + n + 1 <= 5")
    domain = Domain.full(N)
    engine = _Engine(domain, 2, as_targets([make_v(m, m), make_v(n, n)]), None, SearchConfig.plain())
    colors, classes = engine.new_state()
    top = full_set(N)
    co_singletons = [top & ~(1 << i) for i in range(N)]
    report = LemmaReport(True, 0, 0, 0)
    order = engine.order
    total = len(order)

    def rec(pos: int):
        if pos == total:
            report.good_colorings += 1
            report.colorings_covered += 1
            if any(colors[x] == colors[0] for x in co_singletons):
                report.hypothesis_colorings += 1
            if any(colors[x] == colors[0] for x in co_singletons):
                report.holds = False
                report.counterexamples.append(Coloring(domain, tuple(colors), 2))
            return
        x = order[pos]
        for c in (1, 2):
            colors[x] = c
            classes[c] |= 1 << x
            if engine.mono[c - 1](classes[c], x):
                rest = total - pos - 1
                bulk = 1 << rest
                report.colorings_covered += bulk
                report.pruned_by_conclusion += bulk
                report.hypothesis_colorings += _hypothesis_count(colors, co_singletons, rest)
            else:
                rec(pos + 1)
            classes[c] &= ~(1 << x)
            colors[x] = ABSENT

    rec(0)
    assert report.colorings_covered == 1 << total
    return report


def _hypothesis_count(colors: Sequence[int], co_singletons: Sequence[int], rest: int) -> int:
    """Completions of a partial 2-coloring (empty set already colored) meeting the hypothesis."""
    if any(colors[x] == colors[0] for x in co_singletons):
        return 1 << rest
    open_ = sum(1 for x in co_singletons if colors[x] == ABSENT)
    # the complement: every open co-singleton takes the other color
    return (1 << rest) - (1 << (rest - open_))


def verify_vmn_lemma(m: int, n: int) -> bool:
    return vmn_lemma_report(m, n).holds


@dataclass
class PairClassification:
    """Verdicts on B_n - {S_1, S_2, [n]} for distinct S_1, S_2, and on the diagonal B_n - {S, [n]}."""
    pairs: dict[tuple[int, int], tuple[bool, bool]]  # (S_1, S_2) -> (ramsey, minimal)
    diagonal: dict[int, tuple[bool, bool]]

    def ramsey_pairs(self) -> list[tuple[int, int]]:
        return [p for p, (r, _) in self.pairs.items() if r]


def classify_pair_removals(n: int, T: Sequence[Poset | Target],
                           cfg: SearchConfig = SearchConfig()) -> PairClassification:
    """Decide every domain obtained by deleting the top and one or two nonempty proper subsets."""
    targets = as_targets(T)
    top = full_set(n)
    proper = range(1, top)
    memo: dict[Domain, tuple[bool, bool]] = {}

    def decide(D: Domain) -> tuple[bool, bool]:
        key = D.canonical()
        if key not in memo:
            r = is_ramsey_domain(key, targets, cfg)
            memo[key] = (r, r and not any(is_ramsey_domain(key.without(e), targets, cfg)
                                          for e in key.elements()))
        return memo[key]

    pairs = {(a, b): decide(Domain(n, frozenset({a, b, top}))) for a, b in combinations(proper, 2)}
    diagonal = {a: decide(Domain(n, frozenset({a, top}))) for a in proper}
    return PairClassification(pairs, diagonal)


def explore_conjecture(ms: Sequence[int], n_max: int = MAX_EXHAUSTIVE_GROUND,
                       cfg: SearchConfig = SearchConfig()) -> dict:
    """Strong and weak Ramsey numbers of V(m_1,m_1), ..., V(m_k,m_k) against m_1 + ... + m_k + 1."""
    patterns = [make_v(m, m) for m in ms]
    out = {"targets": [p.label for p in patterns], "predicted": sum(ms) + 1}
    for mode in (STRONG, "weak"):
        try:
            out[mode] = compute_ramsey(as_targets(patterns, mode), n_max, cfg)
        except UndecidedWithinBound:
            out[mode] = None
    return out


# --- certificate re-checking ------------------------------------------------------

@dataclass
class Verification:
    ok: bool
    detail: str


def verify_certificate(cert: SearchCertificate | dict | str, rerun: bool = True,
                       plain: bool = False, workers: int = 1) -> Verification:
    """Re-check a certificate.

    Witnesses go through the checker, never through the search.  Exhaustion
    claims are re-derived by running the search again, with the recorded
    configuration or, with ``plain``, without any symmetry reduction.
    """
    if not isinstance(cert, SearchCertificate):
        cert = SearchCertificate.from_json(cert)
    if cert.outcome == INCONCLUSIVE:
        return Verification(False, "inconclusive certificate: nothing is claimed")
    if cert.outcome == WITNESS:
        w = cert.witness
        if w is None or w.domain != cert.domain:
            return Verification(False, "witness missing or on a different domain")
        if cert.kind == "coloring":
            if cert.k is None or any(c > cert.k for c in w.palette()):
                return Verification(False, "witness uses colors outside the palette")
            bad = find_monochromatic(w, cert.targets)
            if bad is not None:
                return Verification(False, f"witness has a monochromatic copy in color {bad.color}")
            return Verification(True, "witness coloring is good")
        t = cert.targets[0]
        if find_monochromatic_any(w, t.poset, t.mode) is not None:
            return Verification(False, "witness has a monochromatic copy")
        if find_rainbow(w, cert.rainbow) is not None:
            return Verification(False, "witness has a rainbow copy")
        return Verification(True, "witness coloring is good")
    if cert.outcome != EXHAUSTED:
        return Verification(False, f"unknown outcome {cert.outcome!r}")
    if not rerun:
        return Verification(False, "exhaustion claims need a rerun to be checked")
    cfg = SearchConfig.plain(workers=workers) if plain else replace(cert.config, node_budget=None, workers=workers)
    if cert.kind == "coloring":
        again = find_good_coloring(cert.domain, cert.k, cert.targets, cfg)
    else:
        again = find_good_partition_coloring(cert.domain, cert.targets[0], cert.rainbow, cfg)
    if again.outcome == EXHAUSTED:
        return Verification(True, f"rerun exhausted the search ({again.nodes_visited} nodes)")
    return Verification(False, f"rerun ended with {again.outcome}")
