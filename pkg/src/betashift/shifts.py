"""Admissibility, finite languages and finite-type classification.

A word lies in one of the shift spaces when every shift of it sits in a
lexicographic window cut out by the kneading invariants.  For a shift whose
first symbol is 0 the window is [sigma(tau+), tau-]; for first symbol 1 it is
[tau+, sigma(tau-)].  The two variants differ only in which endpoints are
strict.  The extended model replaces the outer bounds by 0^inf and 1^inf.

Finite languages come from a follower automaton.  A state is the set of
pending "ties": shifts still equal to a prefix of some bound word, recorded as
(bound, position in the bound word).  Because the bound words are eventually
periodic the positions can be folded onto preperiod + period, so the state
space is finite.  A finite word is in the language exactly when its state can
still be continued forever without violating a strict bound.
"""
from __future__ import annotations

import enum
import math
import sys
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .dynamics import DEFAULT_MAX_ITER, KneadingResult, Params, Status, kneading_pair
from .words import EPWord, bits_to_str, distinct_shifts, lex_compare, shift

BitWord = tuple[int, ...]


class NotEventuallyPeriodic(ValueError):
    """An exact operation needs kneading words with certified periodic tails."""


class NotPeriodic(ValueError):
    """Forbidden words requested for kneading invariants that are not periodic."""


class InconsistencyError(AssertionError):
    """Two independent computations that must agree did not."""


class Space(enum.Enum):
    OMEGA_PLUS = "omega_plus"
    OMEGA_MINUS = "omega_minus"
    OMEGA_TILDE_PLUS = "omega_tilde_plus"
    OMEGA_TILDE_MINUS = "omega_tilde_minus"
    OMEGA = "omega"
    OMEGA_TILDE = "omega_tilde"

    @property
    def components(self) -> tuple["Space", ...]:
        if self is Space.OMEGA:
            return (Space.OMEGA_PLUS, Space.OMEGA_MINUS)
        if self is Space.OMEGA_TILDE:
            return (Space.OMEGA_TILDE_PLUS, Space.OMEGA_TILDE_MINUS)
        return (self,)

    @property
    def extended(self) -> bool:
        return self in (Space.OMEGA_TILDE_PLUS, Space.OMEGA_TILDE_MINUS, Space.OMEGA_TILDE)

    @property
    def plus(self) -> bool:
        return self in (Space.OMEGA_PLUS, Space.OMEGA_TILDE_PLUS)


GREEDY_PLUS = EPWord((1,), (0,))
LAZY_MINUS = EPWord((0,), (1,))

Word = Union[EPWord, BitWord]


@dataclass(frozen=True)
class KneadingSpec:
    """The kneading invariants tau-(p) and tau+(p).

    Each is an EPWord when its tail is certified, otherwise a finite prefix
    (tuple of bits).
    """

    tau_minus: Word
    tau_plus: Word

    def __post_init__(self):
        for w, lead, name in ((self.tau_minus, (0, 1), "tau_minus"), (self.tau_plus, (1, 0), "tau_plus")):
            head = w.prefix(2) if isinstance(w, EPWord) else tuple(w[:2])
            if head[: len(lead)] != lead[: len(head)]:
                raise ValueError(f"{name} must begin with {bits_to_str(lead)}, got {bits_to_str(head)}")

    @classmethod
    def from_params(cls, params: Params, max_iter: int = DEFAULT_MAX_ITER) -> "KneadingSpec":
        return cls.from_results(*kneading_pair(params, max_iter))

    @classmethod
    def from_results(cls, minus: KneadingResult, plus: KneadingResult) -> "KneadingSpec":
        return cls(
            minus.word if minus.word is not None else minus.prefix,
            plus.word if plus.word is not None else plus.prefix,
        )

    @classmethod
    def parse(cls, tau_minus: str, tau_plus: str) -> "KneadingSpec":
        return cls(EPWord.parse(tau_minus), EPWord.parse(tau_plus))

    @property
    def exact(self) -> bool:
        return isinstance(self.tau_minus, EPWord) and isinstance(self.tau_plus, EPWord)

    @property
    def lower(self) -> Word:
        """sigma(tau+(p)), the itinerary of 0."""
        return shift(self.tau_plus, 1) if isinstance(self.tau_plus, EPWord) else self.tau_plus[1:]

    @property
    def upper(self) -> Word:
        """sigma(tau-(p)), the itinerary of 1."""
        return shift(self.tau_minus, 1) if isinstance(self.tau_minus, EPWord) else self.tau_minus[1:]

    @property
    def is_greedy(self) -> bool:
        return self.tau_plus == GREEDY_PLUS

    @property
    def is_lazy(self) -> bool:
        return self.tau_minus == LAZY_MINUS

    def star(self) -> "KneadingSpec":
        """Invariants of the mirrored parameters: (*tau+, *tau-)."""
        from .words import star

        flip = lambda w: star(w) if isinstance(w, EPWord) else star(tuple(w))  # noqa: E731
        return KneadingSpec(flip(self.tau_plus), flip(self.tau_minus))

    def to_json(self) -> dict:
        show = lambda w: str(w) if isinstance(w, EPWord) else bits_to_str(w) + "..."  # noqa: E731
        return {"tau_minus": show(self.tau_minus), "tau_plus": show(self.tau_plus)}


# ---------------------------------------------------------------------------
# infinite-word admissibility


def _window_ok(s: EPWord, spec: KneadingSpec, space: Space) -> bool:
    b, c = spec.tau_minus, spec.tau_plus
    plus = space.plus
    if s[0] == 0:
        if not space.extended and lex_compare(s, spec.lower) < 0:
            return False
        cmp = lex_compare(s, b)
        return cmp < 0 or (cmp == 0 and not plus)
    if not space.extended and lex_compare(s, spec.upper) > 0:
        return False
    cmp = lex_compare(s, c)
    return cmp > 0 or (cmp == 0 and plus)


def admissible_ep(spec: KneadingSpec, w: EPWord, space: Space | str) -> bool:
    """Does every shift of w satisfy the lexicographic conditions of ``space``?"""
    space = Space(space)
    if not spec.exact:
        raise NotEventuallyPeriodic("admissibility needs certified kneading words")
    if len(space.components) > 1:
        return any(admissible_ep(spec, w, s) for s in space.components)
    return all(_window_ok(s, spec, space) for s in distinct_shifts(w))


# ---------------------------------------------------------------------------
# follower automaton


class _Bound:
    """A bound word with positions folded onto preperiod + period."""

    __slots__ = ("word", "lo", "strict", "finite", "n")

    def __init__(self, word: Word, lo: bool, strict: bool):
        self.word = word
        self.lo = lo
        self.strict = strict
        self.finite = not isinstance(word, EPWord)
        self.n = len(word) if self.finite else len(word.pre) + len(word.per)

    def at(self, pos: int) -> int:
        return self.word[pos]

    def advance(self, pos: int) -> int | None:
        pos += 1
        if pos >= self.n:
            if self.finite:
                return None  # beyond the known prefix: assume satisfied
            pos -= len(self.word.per)
        return pos


A, B, C, D = range(4)


class FollowerAutomaton:
    """Deterministic automaton for the finite language of one component space.

    ``approximate`` automata (built from finite kneading prefixes) only test
    the prefix conditions and never compute viability.
    """

    def __init__(self, spec: KneadingSpec, space: Space | str):
        space = Space(space)
        if len(space.components) != 1:
            raise ValueError("build one automaton per component space")
        self.spec = spec
        self.space = space
        self.approximate = not spec.exact
        plus = space.plus
        bounds: list[_Bound | None] = [None] * 4
        if not space.extended:
            bounds[A] = _Bound(spec.lower, lo=True, strict=False)
            bounds[D] = _Bound(spec.upper, lo=False, strict=False)
        bounds[B] = _Bound(spec.tau_minus, lo=False, strict=plus)
        bounds[C] = _Bound(spec.tau_plus, lo=True, strict=not plus)
        self.bounds = bounds
        self._opens = {0: tuple(i for i in (A, B) if bounds[i] is not None),
                       1: tuple(i for i in (C, D) if bounds[i] is not None)}
        self.start: frozenset = frozenset()
        self._delta: dict[tuple[frozenset, int], frozenset | None] = {}
        self._viable: set[frozenset] | None = None

    def step(self, state: frozenset, sym: int) -> frozenset | None:
        """Successor state, or None when some bound is violated."""
        key = (state, sym)
        if key in self._delta:
            return self._delta[key]
        out = set()
        ok = True
        items = list(state) + [(i, 0) for i in self._opens[sym]]
        for bid, pos in items:
            bd = self.bounds[bid]
            c = bd.at(pos)
            if c == sym:
                nxt = bd.advance(pos)
                if nxt is not None:
                    out.add((bid, nxt))
            elif (sym > c) != bd.lo:
                ok = False
                break
        res = frozenset(out) if ok else None
        self._delta[key] = res
        return res

    # viability -------------------------------------------------------------

    def _explore(self) -> dict[frozenset, list[frozenset]]:
        graph: dict[frozenset, list[frozenset]] = {}
        todo = [self.start]
        graph[self.start] = []
        while todo:
            s = todo.pop()
            succ = []
            for sym in (0, 1):
                t = self.step(s, sym)
                if t is None:
                    continue
                succ.append(t)
                if t not in graph:
                    graph[t] = []
                    todo.append(t)
            graph[s] = succ
        return graph

    def _cycle_ok(self, cycle: list[frozenset]) -> bool:
        """On a simple cycle, does any strict tie persist forever?"""
        s0 = cycle[0]
        labels = []
        for i, s in enumerate(cycle):
            t = cycle[(i + 1) % len(cycle)]
            labels.append(0 if self.step(s, 0) == t else 1)
        for tie in s0:
            if not self.bounds[tie[0]].strict:
                continue
            seen = set()
            cur = tie
            while cur is not None and cur not in seen:
                seen.add(cur)
                bid, pos = cur
                for sym in labels:
                    bd = self.bounds[bid]
                    if bd.at(pos) != sym:
                        cur = None
                        break
                    pos = bd.advance(pos)
                else:
                    cur = (bid, pos)
            if cur is not None:
                return False
        return True

    def viable_states(self) -> set[frozenset]:
        """States from which some infinite admissible continuation exists."""
        if self.approximate:
            raise NotEventuallyPeriodic("viability needs certified kneading words")
        if self._viable is not None:
            return self._viable
        graph = self._explore()
        comps = _tarjan(graph)
        good: set[frozenset] = set()
        for comp in comps:
            members = set(comp)
            inner = sum(1 for s in comp for t in graph[s] if t in members)
            if inner == 0:
                continue
            if inner > len(comp):
                good |= members
                continue
            # simple cycle: order it
            cyc = [comp[0]]
            while True:
                nxt = next(t for t in graph[cyc[-1]] if t in members)
                if nxt == cyc[0]:
                    break
                cyc.append(nxt)
            if self._cycle_ok(cyc):
                good |= members
        rev: dict[frozenset, list[frozenset]] = {s: [] for s in graph}
        for s, succ in graph.items():
            for t in succ:
                rev[t].append(s)
        viable = set(good)
        queue = deque(good)
        while queue:
            t = queue.popleft()
            for s in rev[t]:
                if s not in viable:
                    viable.add(s)
                    queue.append(s)
        self._viable = viable
        return viable

    def run(self, word: Sequence[int], state: frozenset | None = None) -> frozenset | None:
        s = self.start if state is None else state
        for sym in word:
            s = self.step(s, sym)
            if s is None:
                return None
        return s

    def accepts(self, word: Sequence[int]) -> bool:
        s = self.run(word)
        if s is None:
            return False
        if self.approximate:
            return True
        return s in self.viable_states()

    def language(self, m: int) -> set[BitWord]:
        viable = self.viable_states()
        out: set[BitWord] = set()
        layer = [((), self.start)] if self.start in viable else []
        for _ in range(m):
            nxt = []
            for w, s in layer:
                for sym in (0, 1):
                    t = self.step(s, sym)
                    if t is not None and t in viable:
                        nxt.append((w + (sym,), t))
            layer = nxt
        out.update(w for w, _ in layer)
        return out

    @property
    def size(self) -> int:
        return len(self._explore())


def _tarjan(graph: dict) -> list[list]:
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    comps: list[list] = []
    counter = 0
    for root in graph:
        if root in index:
            continue
        work = [(root, iter(graph[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(graph[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


_AUTOMATA: dict[tuple[KneadingSpec, Space], FollowerAutomaton] = {}


def automaton(spec: KneadingSpec, space: Space | str) -> FollowerAutomaton:
    """Cached follower automaton for a component space."""
    key = (spec, Space(space))
    a = _AUTOMATA.get(key)
    if a is None:
        if len(_AUTOMATA) > 256:
            _AUTOMATA.clear()
        a = FollowerAutomaton(spec, key[1])
        _AUTOMATA[key] = a
    return a


def language(spec: KneadingSpec, m: int, space: Space | str = Space.OMEGA) -> set[BitWord]:
    """All words of length m that extend to an admissible infinite word."""
    if m < 0:
        raise ValueError("length must be nonnegative")
    if not spec.exact:
        raise NotEventuallyPeriodic("languages need certified kneading words")
    out: set[BitWord] = set()
    for comp in Space(space).components:
        out |= automaton(spec, comp).language(m)
    return out


def in_language(spec: KneadingSpec, word: Sequence[int], space: Space | str = Space.OMEGA) -> bool:
    return any(automaton(spec, comp).accepts(tuple(word)) for comp in Space(space).components)


# ---------------------------------------------------------------------------
# finite type


class Verdict(enum.Enum):
    SFT = "SFT"
    NOT_SFT = "NotSFT"
    UNKNOWN = "UnknownAtDepth"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    depth: int | None = None
    forbidden: tuple[BitWord, ...] | None = None
    memory: int | None = None
    rule: str = ""
    note: str = ""

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict.value, "rule": self.rule}
        if self.depth is not None:
            out["depth"] = self.depth
        if self.forbidden is not None:
            out["forbidden"] = sorted(bits_to_str(w) for w in self.forbidden)
            out["memory"] = self.memory
        if self.note:
            out["note"] = self.note
        return out


def memory_bound(spec: KneadingSpec) -> int:
    """Largest preperiod plus the lcm of the periods of the two invariants."""
    m, p = spec.tau_minus, spec.tau_plus
    return max(len(m.pre), len(p.pre)) + math.lcm(len(m.per), len(p.per))


def _finite_type_eligible(spec: KneadingSpec) -> bool:
    if not spec.exact:
        return False
    m, p = spec.tau_minus, spec.tau_plus
    if m.is_periodic and p.is_periodic:
        return True
    return (spec.is_greedy and m.is_periodic) or (spec.is_lazy and p.is_periodic)


class _UnionRunner:
    """Deterministic run of the union language: one viable state (or None) per component."""

    def __init__(self, spec: KneadingSpec, space: Space):
        self.comps = [automaton(spec, c) for c in space.components]
        self.viables = [a.viable_states() for a in self.comps]
        self.start = tuple(a.start if a.start in v else None for a, v in zip(self.comps, self.viables))

    def step(self, states: tuple, sym: int) -> tuple:
        out = []
        for a, v, st in zip(self.comps, self.viables, states):
            t = a.step(st, sym) if st is not None else None
            out.append(t if t is not None and t in v else None)
        return tuple(out)

    @staticmethod
    def alive(states: tuple) -> bool:
        return any(t is not None for t in states)


def forbidden_words(
    spec: KneadingSpec, space: Space | str = Space.OMEGA, verify_up_to: int | None = None
) -> tuple[BitWord, ...]:
    """Minimal forbidden words of length at most M+1 (M = memory_bound).

    A word w is minimally forbidden when w is not in the language but both
    w[:-1] and w[1:] are.  Words are generated depth first while tracking the
    pair (run of w, run of w[1:]); branches that cannot reach a forbidden
    ending within the length budget are pruned, so the cost is governed by
    the size of the answer rather than the size of the language.

    The shift of finite type they define is checked to have the same language
    as the space for every length up to ``verify_up_to`` (default 2M+2).
    """
    space = Space(space)
    if not _finite_type_eligible(spec):
        raise NotPeriodic("forbidden words need periodic kneading invariants")
    big_m = memory_bound(spec)
    runner = _UnionRunner(spec, space)
    forb = _minimal_forbidden(runner, big_m + 1)
    limit = 2 * big_m + 2 if verify_up_to is None else verify_up_to
    bad = _SFTLanguage(forb).first_disagreement(spec, space, limit)
    if bad is not None:
        raise InconsistencyError(f"forbidden-word SFT disagrees with the language at length {bad}")
    return tuple(forb)


def _minimal_forbidden(runner: _UnionRunner, max_len: int) -> list[BitWord]:
    start = runner.start
    out: list[BitWord] = []
    if not runner.alive(start):
        return out
    for sym in (0, 1):
        if not runner.alive(runner.step(start, sym)):
            out.append((sym,))
    # pair graph over (run of w, run of w[1:]) for nonempty w in the language
    firsts = {}
    for sym in (0, 1):
        t = runner.step(start, sym)
        if runner.alive(t):
            firsts[sym] = (t, start)
    succ: dict[tuple, list[tuple[int, tuple | None]]] = {}
    stack = list(firsts.values())
    while stack:
        node = stack.pop()
        if node in succ:
            continue
        s1, s2 = node
        edges = []
        for sym in (0, 1):
            t2 = runner.step(s2, sym)
            if not runner.alive(t2):
                continue  # w[1:] + sym is not in the language
            t1 = runner.step(s1, sym)
            if runner.alive(t1):
                edges.append((sym, (t1, t2)))
                stack.append((t1, t2))
            else:
                edges.append((sym, None))  # w + sym is minimally forbidden
        succ[node] = edges
    # distance (in symbols) from each node to a forbidden ending
    rev: dict[tuple, list[tuple]] = {v: [] for v in succ}
    dist: dict[tuple, int] = {}
    queue: deque = deque()
    for v, edges in succ.items():
        for _, t in edges:
            if t is None:
                if v not in dist:
                    dist[v] = 1
                    queue.append(v)
            else:
                rev[t].append(v)
    while queue:
        t = queue.popleft()
        for v in rev[t]:
            if v not in dist:
                dist[v] = dist[t] + 1
                queue.append(v)
    word: list[int] = []

    def dfs(node: tuple) -> None:
        for sym, t in succ[node]:
            if t is None:
                out.append(tuple(word) + (sym,))
            elif len(word) + 1 + dist.get(t, max_len + 1) <= max_len:
                word.append(sym)
                dfs(t)
                word.pop()

    # recursion depth is bounded by max_len
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * max_len + 100))
    try:
        for sym, node in firsts.items():
            if 1 + dist.get(node, max_len + 1) <= max_len:
                word.append(sym)
                dfs(node)
                word.pop()
    finally:
        sys.setrecursionlimit(limit)
    out.sort(key=lambda w: (len(w), w))
    return out


class _SFTLanguage:
    """Language of the shift of finite type defined by a forbidden list.

    Words are read through an Aho-Corasick automaton of the forbidden list;
    a word belongs to the language when it avoids the list and its state
    still has an infinite list-avoiding continuation.
    """

    def __init__(self, forbidden: Sequence[BitWord]):
        self.forbidden = set(forbidden)
        self.k = max((len(w) for w in forbidden), default=1) - 1
        goto: list[dict[int, int]] = [{}]
        bad = [False]
        for w in self.forbidden:
            node = 0
            for sym in w:
                if sym not in goto[node]:
                    goto.append({})
                    bad.append(False)
                    goto[node][sym] = len(goto) - 1
                node = goto[node][sym]
            bad[node] = True
        n = len(goto)
        delta = [[0, 0] for _ in range(n)]
        fail = [0] * n
        queue: deque = deque()
        for sym in (0, 1):
            if sym in goto[0]:
                child = goto[0][sym]
                delta[0][sym] = child
                queue.append(child)
        while queue:
            node = queue.popleft()
            bad[node] = bad[node] or bad[fail[node]]
            for sym in (0, 1):
                if sym in goto[node]:
                    child = goto[node][sym]
                    fail[child] = delta[fail[node]][sym]
                    delta[node][sym] = child
                    queue.append(child)
                else:
                    delta[node][sym] = delta[fail[node]][sym]
        self._delta = delta
        self._bad = bad
        # states with an infinite path avoiding bad states
        alive = {v for v in range(n) if not bad[v]}
        changed = True
        while changed:
            changed = False
            for v in list(alive):
                if not any(delta[v][s] in alive for s in (0, 1)):
                    alive.discard(v)
                    changed = True
        self._alive = alive

    def _step(self, state: int, sym: int) -> tuple[int, bool]:
        """Next state and whether the extended word is in the language."""
        t = self._delta[state][sym]
        return t, t in self._alive

    def first_disagreement(self, spec: "KneadingSpec", space: "Space", limit: int) -> int | None:
        """Smallest m <= limit where this language and the space's differ, else None.

        Both languages are prefix closed and membership of an extension depends
        only on the pair (component states, automaton state), so a breadth-first
        walk over reachable pairs decides every length at once.
        """
        runner = _UnionRunner(spec, space)
        start = (runner.start, 0)
        if runner.alive(runner.start) != (0 in self._alive):
            return 0
        seen = {start}
        layer = [start]
        for depth in range(1, limit + 1):
            nxt = []
            for states, node in layer:
                for sym in (0, 1):
                    new_states = runner.step(states, sym)
                    in_space = runner.alive(new_states)
                    new_node, in_sft = self._step(node, sym)
                    if in_space != in_sft:
                        return depth
                    if in_space:
                        pair = (new_states, new_node)
                        if pair not in seen:
                            seen.add(pair)
                            nxt.append(pair)
            layer = nxt
            if not layer:
                break
        return None

    def words(self, m: int) -> set[BitWord]:
        layer = [((), 0)] if 0 in self._alive else []
        for _ in range(m):
            layer = [(w + (s,), t) for w, v in layer for s in (0, 1)
                     for t in (self._delta[v][s],) if t in self._alive]
        return {w for w, _ in layer}


def _classify_spec(spec: KneadingSpec, greedy: bool, lazy: bool, depth: int | None, space: Space) -> Classification:
    m, p = spec.tau_minus, spec.tau_plus
    extended = space is Space.OMEGA_TILDE
    if greedy and not lazy:
        key, name = (p, "tau_plus") if extended else (m, "tau_minus")
        rule = f"alpha = 0: finite type iff {name} is periodic"
        words = (key,)
    elif lazy and not greedy:
        key, name = (m, "tau_minus") if extended else (p, "tau_plus")
        rule = f"alpha = 2 - beta: finite type iff {name} is periodic"
        words = (key,)
    else:
        rule = "interior alpha: finite type iff both invariants are periodic"
        words = (m, p)
    if any(not isinstance(w, EPWord) for w in (m, p)):
        return Classification(Verdict.UNKNOWN, depth=depth, rule=rule)
    if all(w.is_periodic for w in words):
        forb = forbidden_words(spec, space)
        memory = max(len(w) for w in forb) - 1 if forb else 0
        return Classification(Verdict.SFT, forbidden=forb, memory=memory, rule=rule)
    return Classification(Verdict.NOT_SFT, rule=rule)


def _as_spec(obj, max_iter: int) -> tuple[KneadingSpec, bool, bool, int | None]:
    if isinstance(obj, Params):
        minus, plus = kneading_pair(obj, max_iter)
        spec = KneadingSpec.from_results(minus, plus)
        depth = max_iter if Status.UNKNOWN in (minus.status, plus.status) else None
        return spec, obj.is_greedy, obj.is_lazy, depth
    if isinstance(obj, KneadingSpec):
        depth = None if obj.exact else max(
            len(w) for w in (obj.tau_minus, obj.tau_plus) if not isinstance(w, EPWord)
        )
        return obj, obj.is_greedy, obj.is_lazy, depth
    raise TypeError("expected Params or KneadingSpec")


def classify(spec_or_params, max_iter: int = DEFAULT_MAX_ITER) -> Classification:
    """Finite-type verdict for the intermediate shift."""
    spec, greedy, lazy, depth = _as_spec(spec_or_params, max_iter)
    return _classify_spec(spec, greedy, lazy, depth, Space.OMEGA)


def classify_extended(spec_or_params, max_iter: int = DEFAULT_MAX_ITER) -> Classification:
    """Finite-type verdict for the extended model's shift.

    For interior alpha the verdict must agree with :func:`classify`; a
    disagreement raises :class:`InconsistencyError`.  At the two boundary
    values the rules differ and no agreement is asserted.
    """
    spec, greedy, lazy, depth = _as_spec(spec_or_params, max_iter)
    ext = _classify_spec(spec, greedy, lazy, depth, Space.OMEGA_TILDE)
    if not (greedy or lazy):
        base = _classify_spec(spec, greedy, lazy, depth, Space.OMEGA)
        if base.verdict != ext.verdict:
            raise InconsistencyError(f"extended verdict {ext.verdict} differs from {base.verdict}")
    return ext


# ---------------------------------------------------------------------------
# zero-full / one-full counters


class Fullness(enum.Enum):
    ZERO = "zero"
    ONE = "one"


def fullness_count(
    spec: KneadingSpec, w: Word, depth: int, which: Fullness | str = Fullness.ZERO
) -> tuple[int, bool]:
    """Count switch positions k in (2, depth].

    For ``zero``: k with w_k = 0 and (w_1..w_{k-1}, 1) in the extended minus
    language.  For ``one``: k with w_k = 1 and (w_1..w_{k-1}, 0) in the
    extended plus language.  Returns (count, approximate), where approximate is
    true when the invariants are only known as prefixes and admissibility was
    tested against those prefixes.
    """
    if depth < 3:
        raise ValueError("depth must be at least 3")
    which = Fullness(which)
    if which is Fullness.ZERO:
        fa, target, switch = automaton(spec, Space.OMEGA_TILDE_MINUS), 0, 1
    else:
        fa, target, switch = automaton(spec, Space.OMEGA_TILDE_PLUS), 1, 0
    approx = fa.approximate
    viable = None if approx else fa.viable_states()
    bits = w.prefix(depth) if isinstance(w, EPWord) else tuple(w[:depth])
    if len(bits) < depth:
        raise ValueError("word shorter than the requested depth")
    state = fa.start
    count = 0
    for k in range(1, depth + 1):
        sym = bits[k - 1]
        if k > 2 and sym == target:
            t = fa.step(state, switch)
            if t is not None and (approx or t in viable):
                count += 1
        state = fa.step(state, sym)
        if state is None:
            break
    return count, approx
