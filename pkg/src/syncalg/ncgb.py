"""Two-sided noncommutative Groebner bases over the rationals.

Rewrite rules are monic polynomials with a cached leading word; a rule
rewrites its leading word to minus its tail.  Completion processes
S-polynomials of overlapping leading words in ascending lcm degree and
interreduces the survivors, so a finished basis is the unique reduced
Groebner basis of the ideal for the given order.

An independent exact-linear-algebra membership oracle is included so that
rewriting results can be cross-checked without trusting the rewriter.
"""

from __future__ import annotations

import heapq
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import count, product
from typing import Iterable, Iterator, Sequence

from .freealg import (
    EMPTY_WORD,
    Alphabet,
    DegLexOrder,
    Poly,
    Scalar,
    Word,
    _norm,
    parse_poly,
    poly_to_text,
)

__all__ = [
    "Overlap",
    "RewriteRule",
    "BasisStatus",
    "GroebnerBasis",
    "MembershipVerdict",
    "NormalWordCounts",
    "QuotientDim",
    "LinearSpan",
    "find_overlaps",
    "s_polynomial",
    "normal_form",
    "interreduce",
    "complete",
    "confluence_report",
    "is_member",
    "normal_words",
    "iter_normal_words",
    "quotient_dimension",
    "ideal_row_space",
    "linalg_membership",
    "basis_to_text",
    "basis_from_text",
]


# --- overlaps and S-polynomials ----------------------------------------------


@dataclass(frozen=True)
class Overlap:
    """An alignment a*u*b == c*w*d == lcm of two leading words u and w.

    kind is one of "left-overlap" (a proper suffix of u is a proper prefix
    of w), "right-overlap" (the mirror), "contains" (w occurs inside u,
    including the identical-word alignment), "contained" (u occurs strictly
    inside w).  Plain juxtaposition is never an overlap.
    """

    kind: str
    a: Word
    b: Word
    c: Word
    d: Word
    lcm: Word


def find_overlaps(u: Word, w: Word) -> list[Overlap]:
    """All overlap alignments of the words u and w, in both directions."""
    if not u or not w:
        raise ValueError("overlap words must be nonempty")
    res: list[Overlap] = []
    lu, lw = len(u), len(w)
    # w inside u (also covers the identical-word alignment when u == w)
    if lw <= lu:
        start = 0
        while True:
            i = u.find(w, start)
            if i < 0:
                break
            res.append(Overlap("contains", EMPTY_WORD, EMPTY_WORD, u[:i], u[i + lw:], u))
            start = i + 1
    else:
        start = 0
        while True:
            i = w.find(u, start)
            if i < 0:
                break
            res.append(Overlap("contained", w[:i], w[i + lu:], EMPTY_WORD, EMPTY_WORD, w))
            start = i + 1
    # proper suffix of u == proper prefix of w
    top = min(lu, lw)
    for k in range(1, top):
        if u[lu - k:] == w[:k]:
            res.append(Overlap("left-overlap", EMPTY_WORD, w[k:], u[: lu - k], EMPTY_WORD, u + w[k:]))
    # proper suffix of w == proper prefix of u; mirror alignments duplicate
    # the ones above when u == w, so they are skipped in that case
    if u != w:
        for k in range(1, top):
            if w[lw - k:] == u[:k]:
                res.append(Overlap("right-overlap", w[: lw - k], EMPTY_WORD, EMPTY_WORD, u[k:], w + u[k:]))
    return res


@dataclass(frozen=True)
class RewriteRule:
    """A monic polynomial used as a rewrite rule lead -> -tail."""

    poly: Poly
    lead: Word
    repl: tuple[tuple[Word, Scalar], ...]

    @classmethod
    def from_poly(cls, p: Poly, order: DegLexOrder) -> "RewriteRule":
        p = p.monic(order)
        lead, _ = p.leading_term(order)
        repl = tuple(
            (w, _norm(-c))
            for w, c in sorted(p.items(), key=lambda it: order.key(it[0]), reverse=True)
            if w != lead
        )
        return cls(p, lead, repl)

    @property
    def degree(self) -> int:
        return len(self.lead)


def s_polynomial(p: RewriteRule, q: RewriteRule, o: Overlap) -> Poly:
    """The S-polynomial a*p*b - c*q*d for a valid overlap of lead(p), lead(q)."""
    if o.a + p.lead + o.b != o.lcm or o.c + q.lead + o.d != o.lcm:
        raise ValueError("malformed overlap: cofactors do not align the leading words")
    out: dict[Word, Scalar] = {}
    for w, c in p.poly.items():
        k = o.a + w + o.b
        out[k] = out.get(k, 0) + c
    for w, c in q.poly.items():
        k = o.c + w + o.d
        out[k] = out.get(k, 0) - c
    return Poly(out)


# --- rewriting ----------------------------------------------------------------


class _LeadMatcher:
    """Index of leading words by length for fast subword matching."""

    __slots__ = ("_by_len", "_lengths")

    def __init__(self) -> None:
        self._by_len: dict[int, dict[Word, int]] = {}
        self._lengths: list[int] = []

    def add(self, lead: Word, idx: int) -> None:
        L = len(lead)
        bucket = self._by_len.get(L)
        if bucket is None:
            bucket = self._by_len[L] = {}
            self._lengths.append(L)
            self._lengths.sort()
        bucket[lead] = idx

    def remove(self, lead: Word) -> None:
        L = len(lead)
        bucket = self._by_len[L]
        del bucket[lead]
        if not bucket:
            del self._by_len[L]
            self._lengths.remove(L)

    def copy(self) -> "_LeadMatcher":
        m = _LeadMatcher.__new__(_LeadMatcher)
        m._by_len = {L: dict(b) for L, b in self._by_len.items()}
        m._lengths = list(self._lengths)
        return m

    def find(self, w: Word) -> tuple[int, int] | None:
        """Earliest-indexed matching rule and its leftmost occurrence.

        Returns (rule index, position) minimal in that lexicographic sense,
        or None when no leading word occurs in w.
        """
        by_len = self._by_len
        empty = by_len.get(0)
        best: tuple[int, int] | None = (empty[EMPTY_WORD], 0) if empty else None
        n = len(w)
        for pos in range(n):
            for L in self._lengths:
                if L == 0:
                    continue
                end = pos + L
                if end > n:
                    break
                idx = by_len[L].get(w[pos:end])
                if idx is not None:
                    cand = (idx, pos)
                    if best is None or cand < best:
                        best = cand
        return best


def _reduce_dict(
    terms: dict[Word, Scalar],
    rules: Sequence[RewriteRule],
    matcher: _LeadMatcher,
    order: DegLexOrder,
    trace: list[tuple[Word, int, int]] | None = None,
) -> dict[Word, Scalar]:
    """Full normal form of a term dict under the indexed rules.

    The largest pending word is rewritten first; within a word the
    earliest-indexed matching rule is applied at its leftmost occurrence.
    Every replacement word is strictly smaller, so this terminates.
    """
    heap_key = order.heap_key
    work = dict(terms)
    heap = [(heap_key(w), w) for w in work]
    heapq.heapify(heap)
    out: dict[Word, Scalar] = {}
    while heap:
        w = heapq.heappop(heap)[1]
        c = work.pop(w, 0)
        if not c:
            continue
        hit = matcher.find(w)
        if hit is None:
            out[w] = c
            continue
        idx, pos = hit
        rule = rules[idx]
        if trace is not None:
            trace.append((w, idx, pos))
        a = w[:pos]
        b = w[pos + len(rule.lead):]
        for u, d in rule.repl:
            nw = a + u + b
            nc = c * d
            if nw in out:
                acc = out[nw] + nc
                if acc:
                    out[nw] = acc
                else:
                    del out[nw]
            elif nw in work:
                work[nw] = work[nw] + nc
            else:
                work[nw] = nc
                heapq.heappush(heap, (heap_key(nw), nw))
    return {w: _norm(c) for w, c in out.items() if c}


def _coerce_rules(
    basis_or_rules: "GroebnerBasis | Iterable[RewriteRule | Poly]",
    order: DegLexOrder | None,
) -> tuple[Sequence[RewriteRule], _LeadMatcher, DegLexOrder]:
    if isinstance(basis_or_rules, GroebnerBasis):
        b = basis_or_rules
        return b.rules, b._matcher, b.order
    if order is None:
        raise ValueError("an order is required when passing a bare rule list")
    rules = [
        r if isinstance(r, RewriteRule) else RewriteRule.from_poly(r, order)
        for r in basis_or_rules
    ]
    matcher = _LeadMatcher()
    for i, r in enumerate(rules):
        matcher.add(r.lead, i)
    return rules, matcher, order


def normal_form(
    p: Poly,
    basis_or_rules: "GroebnerBasis | Iterable[RewriteRule | Poly]",
    order: DegLexOrder | None = None,
    trace: list[tuple[Word, int, int]] | None = None,
) -> Poly:
    """The unique fully reduced representative of p modulo the rules."""
    rules, matcher, order = _coerce_rules(basis_or_rules, order)
    return Poly._raw(_reduce_dict(dict(p.items()), rules, matcher, order, trace))


# --- basis objects ------------------------------------------------------------


@dataclass(frozen=True)
class BasisStatus:
    kind: str  # "complete" | "bounded"
    bound: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("complete", "bounded"):
            raise ValueError(f"unknown basis status {self.kind!r}")
        if (self.kind == "bounded") != (self.bound is not None):
            raise ValueError("bounded status must carry its degree bound")

    @property
    def is_complete(self) -> bool:
        return self.kind == "complete"

    def __str__(self) -> str:
        return "complete" if self.kind == "complete" else f"bounded:{self.bound}"

    @classmethod
    def parse(cls, s: str) -> "BasisStatus":
        if s == "complete":
            return cls("complete")
        if s.startswith("bounded:"):
            return cls("bounded", int(s.split(":", 1)[1]))
        raise ValueError(f"unrecognized status line {s!r}")


COMPLETE = BasisStatus("complete")


@dataclass(frozen=True)
class GroebnerBasis:
    order: DegLexOrder
    rules: tuple[RewriteRule, ...]
    status: BasisStatus

    @cached_property
    def _matcher(self) -> _LeadMatcher:
        m = _LeadMatcher()
        for i, r in enumerate(self.rules):
            m.add(r.lead, i)
        return m

    def normal_form(
        self, p: Poly, trace: list[tuple[Word, int, int]] | None = None
    ) -> Poly:
        return Poly._raw(
            _reduce_dict(dict(p.items()), self.rules, self._matcher, self.order, trace)
        )

    def contains_unit(self) -> bool:
        """True iff some rule is a nonzero constant (then rules == (1,))."""
        return any(r.lead == EMPTY_WORD for r in self.rules)

    def leads(self) -> tuple[Word, ...]:
        return tuple(r.lead for r in self.rules)


@dataclass(frozen=True)
class MembershipVerdict:
    kind: str  # "member" | "non-member" | "unknown"
    remainder: Poly
    trace: tuple[tuple[Word, int, int], ...] = ()


def is_member(p: Poly, basis: GroebnerBasis) -> MembershipVerdict:
    """Decide ideal membership by reduction.

    "member" is definitive for any basis; "non-member" is only claimed for
    a complete basis, otherwise the verdict is "unknown".
    """
    trace: list[tuple[Word, int, int]] = []
    r = basis.normal_form(p, trace)
    if not r:
        return MembershipVerdict("member", r, tuple(trace))
    if basis.status.is_complete:
        return MembershipVerdict("non-member", r)
    return MembershipVerdict("unknown", r)


# --- interreduction and completion ---------------------------------------------


def _unit_basis(order: DegLexOrder, status: BasisStatus = COMPLETE) -> GroebnerBasis:
    return GroebnerBasis(order, (RewriteRule(Poly.one(), EMPTY_WORD, ()),), status)


def interreduce(
    items: Iterable[RewriteRule | Poly], order: DegLexOrder
) -> tuple[RewriteRule, ...]:
    """Mutually reduce a rule set to its canonical interreduced form.

    Zero reductions drop out, every tail is fully reduced against the other
    rules, and the result is sorted by ascending leading word.  For a
    Groebner basis the output is the unique reduced basis, independent of
    the input sequence order.
    """
    polys: list[Poly] = []
    for it in items:
        p = it.poly if isinstance(it, RewriteRule) else it
        if p:
            polys.append(p.monic(order))
    for p in polys:
        if p.leading_term(order)[0] == EMPTY_WORD:
            return (RewriteRule(Poly.one(), EMPTY_WORD, ()),)
    changed = True
    rules = [RewriteRule.from_poly(p, order) for p in polys]
    while changed:
        changed = False
        rules.sort(key=lambda r: order.key(r.lead))
        out: list[RewriteRule] = []
        for i, rule in enumerate(rules):
            others = out + rules[i + 1:]
            r = normal_form(rule.poly, others, order)
            if not r:
                changed = True
                continue
            if r.leading_term(order)[0] == EMPTY_WORD:
                return (RewriteRule(Poly.one(), EMPTY_WORD, ()),)
            if r != rule.poly:
                changed = True
                rule = RewriteRule.from_poly(r, order)
            out.append(rule)
        rules = out
    rules.sort(key=lambda r: order.key(r.lead))
    return tuple(rules)


class _UnitFound(Exception):
    pass


def complete(
    generators: Iterable[Poly],
    order: DegLexOrder,
    max_degree: int = 12,
    threads: int = 1,
) -> GroebnerBasis:
    """Run completion on the two-sided ideal generated by the given polynomials.

    Obstructions are processed in ascending lcm degree (ties oldest first).
    An S-polynomial whose lcm degree exceeds max_degree is deferred and the
    returned status downgrades to bounded; otherwise the basis is complete
    and interreduced, hence canonical for the ideal and order.  Deriving a
    nonzero constant short-circuits to the unit basis immediately.
    """
    gens = [g for g in generators]
    if not gens:
        raise ValueError("empty generator list")
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    if threads < 1:
        raise ValueError("threads must be at least 1")
    gens = [g for g in gens if g]
    if not gens:
        return GroebnerBasis(order, (), COMPLETE)
    top = max(g.degree() for g in gens)
    if top > max_degree:
        raise ValueError(
            f"max_degree {max_degree} is below the generator degree {top}"
        )

    rules: list[RewriteRule] = []
    active: list[bool] = []
    matcher = _LeadMatcher()
    heap: list[tuple] = []
    seq = count()
    bounded = False

    def add_poly(p: Poly) -> None:
        t = _reduce_dict(dict(p.items()), rules, matcher, order)
        if not t:
            return
        lead = max(t, key=order.key)
        lc = t[lead]
        if lc != 1:
            inv = Fraction(1, lc) if isinstance(lc, int) else 1 / lc
            t = {w: _norm(c * inv) for w, c in t.items()}
        if lead == EMPTY_WORD:
            raise _UnitFound
        rule = RewriteRule(
            Poly._raw(t),
            lead,
            tuple(
                (w, _norm(-c))
                for w, c in sorted(t.items(), key=lambda it: order.key(it[0]), reverse=True)
                if w != lead
            ),
        )
        idx = len(rules)
        rules.append(rule)
        active.append(True)
        matcher.add(lead, idx)
        # Rules whose lead contains the new lead are now redundant as rules;
        # their polynomials re-enter the queue so no information is lost.
        for j in range(idx):
            if active[j] and lead in rules[j].lead:
                active[j] = False
                matcher.remove(rules[j].lead)
                heapq.heappush(
                    heap, (rules[j].degree, -1, -1, next(seq), ("p", rules[j].poly))
                )
        for j in range(idx + 1):
            if not active[j]:
                continue
            for ov in find_overlaps(lead, rules[j].lead):
                if j == idx and not (ov.a or ov.b or ov.c or ov.d):
                    continue  # identical alignment of a rule with itself
                heapq.heappush(
                    heap, (len(ov.lcm), j, idx, next(seq), ("s", idx, j, ov))
                )

    def process_spoly(i: int, j: int, ov: Overlap) -> None:
        if not (active[i] and active[j]):
            return
        s = s_polynomial(rules[i], rules[j], ov)
        if s:
            add_poly(s)

    try:
        for g in gens:
            add_poly(g)
        if threads == 1:
            while heap:
                deg, _, _, _, payload = heapq.heappop(heap)
                if deg > max_degree:
                    bounded = True
                    break
                if payload[0] == "p":
                    add_poly(payload[1])
                else:
                    process_spoly(payload[1], payload[2], payload[3])
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                while heap:
                    deg = heap[0][0]
                    if deg > max_degree:
                        bounded = True
                        break
                    batch = []
                    while heap and heap[0][0] == deg:
                        batch.append(heapq.heappop(heap)[4])
                    spolys: list[tuple[int, int, Overlap]] = []
                    for payload in batch:
                        if payload[0] == "p":
                            add_poly(payload[1])
                        else:
                            spolys.append((payload[1], payload[2], payload[3]))
                    if not spolys:
                        continue
                    # Reduce the whole batch against a frozen snapshot in
                    # parallel, then insert survivors in deterministic batch
                    # order; the final interreduced basis is the same as in
                    # the sequential schedule.
                    snap_rules = tuple(rules)
                    snap_matcher = matcher.copy()

                    def against_snapshot(item: tuple[int, int, Overlap]) -> Poly:
                        i, j, ov = item
                        if not (active[i] and active[j]):
                            return Poly.zero()
                        s = s_polynomial(snap_rules[i], snap_rules[j], ov)
                        if not s:
                            return s
                        return Poly._raw(
                            _reduce_dict(dict(s.items()), snap_rules, snap_matcher, order)
                        )

                    # Deactivation decisions are replayed at consume time in
                    # batch order, so the evolution of the rule list matches
                    # the sequential schedule exactly.
                    for item, cand in zip(spolys, pool.map(against_snapshot, spolys)):
                        if not (active[item[0]] and active[item[1]]):
                            continue
                        if cand:
                            add_poly(cand)
    except _UnitFound:
        return _unit_basis(order)

    final = interreduce(
        [rules[i].poly for i in range(len(rules)) if active[i]], order
    )
    if final and final[0].lead == EMPTY_WORD:
        return _unit_basis(order)
    status = BasisStatus("bounded", max_degree) if bounded else COMPLETE
    return GroebnerBasis(order, final, status)


def confluence_report(
    basis_or_rules: "GroebnerBasis | Iterable[RewriteRule | Poly]",
    order: DegLexOrder | None = None,
) -> tuple[int, list[tuple[int, int, Overlap, Poly]]]:
    """Reduce every S-polynomial of every overlap of the given rule set.

    Returns (number of S-polynomials checked, failures); an empty failure
    list is a full confluence witness for the set.
    """
    rules, matcher, order = _coerce_rules(basis_or_rules, order)
    failures: list[tuple[int, int, Overlap, Poly]] = []
    total = 0
    for i in range(len(rules)):
        for j in range(i, len(rules)):
            for ov in find_overlaps(rules[i].lead, rules[j].lead):
                if i == j and not (ov.a or ov.b or ov.c or ov.d):
                    continue
                total += 1
                s = s_polynomial(rules[i], rules[j], ov)
                if not s:
                    continue
                r = Poly._raw(_reduce_dict(dict(s.items()), rules, matcher, order))
                if r:
                    failures.append((i, j, ov, r))
    return total, failures


# --- normal words and quotient dimension ---------------------------------------


@dataclass(frozen=True)
class NormalWordCounts:
    counts: tuple[int, ...]  # counts[L] = normal words of length L
    closed: bool  # some length had no normal words
    advisory: bool  # True when the basis is not complete

    @property
    def total(self) -> int:
        return sum(self.counts)


def _lead_length_index(basis: GroebnerBasis) -> dict[int, set[Word]]:
    by_len: dict[int, set[Word]] = {}
    for r in basis.rules:
        by_len.setdefault(len(r.lead), set()).add(r.lead)
    return by_len


def _extension_blocked(w: Word, by_len: dict[int, set[Word]]) -> bool:
    # w = u + g with u normal: w is reducible iff some lead is a suffix.
    n = len(w)
    for L, leads in by_len.items():
        if L <= n and w[n - L:] in leads:
            return True
    return False


def iter_normal_words(basis: GroebnerBasis, max_length: int) -> Iterator[Word]:
    """Yield normal words in ascending length, stopping at closure or the cap."""
    by_len = _lead_length_index(basis)
    if 0 in by_len:
        return
    alphabet = basis.order.alphabet
    letters = list(alphabet.letters())
    level = [EMPTY_WORD]
    yield EMPTY_WORD
    for _ in range(max_length):
        nxt = []
        for u in level:
            for g in letters:
                w = u + g
                if not _extension_blocked(w, by_len):
                    nxt.append(w)
                    yield w
        if not nxt:
            return
        level = nxt


def normal_words(basis: GroebnerBasis, max_length: int) -> NormalWordCounts:
    """Count normal words (no rule lead as subword) by length via BFS."""
    if max_length < 0:
        raise ValueError("max_length must be nonnegative")
    by_len = _lead_length_index(basis)
    advisory = not basis.status.is_complete
    if 0 in by_len:
        return NormalWordCounts((0,), True, advisory)
    alphabet = basis.order.alphabet
    letters = list(alphabet.letters())
    counts = [1]
    level = [EMPTY_WORD]
    closed = False
    for _ in range(max_length):
        nxt = []
        for u in level:
            for g in letters:
                w = u + g
                if not _extension_blocked(w, by_len):
                    nxt.append(w)
        counts.append(len(nxt))
        if not nxt:
            closed = True
            break
        level = nxt
    return NormalWordCounts(tuple(counts), closed, advisory)


@dataclass(frozen=True)
class QuotientDim:
    kind: str  # "finite" | "infinite" | "unknown"
    count: int | None = None
    max_length: int | None = None  # for "unknown": the cap that was reached


def quotient_dimension(basis: GroebnerBasis, max_length: int = 256) -> QuotientDim:
    """Dimension of the quotient as a vector space.

    For a complete basis the answer is decisive: the normal words form the
    language avoiding the leading words as factors, which is infinite iff
    the suffix-state extension automaton has a cycle, and otherwise finite
    with the normal-word count as dimension.  A bounded basis yields
    "unknown" since further rules could still appear.
    """
    if not basis.status.is_complete:
        return QuotientDim("unknown", max_length=max_length)
    if basis.contains_unit():
        return QuotientDim("finite", 0)
    by_len = _lead_length_index(basis)
    alphabet = basis.order.alphabet
    letters = list(alphabet.letters())
    if not letters:
        return QuotientDim("finite", 1)
    k = max(by_len, default=1)
    # states: normal words of length <= k-1, reachable from the empty word
    states: list[Word] = [EMPTY_WORD]
    seen = {EMPTY_WORD}
    frontier = [EMPTY_WORD]
    while frontier:
        nxt = []
        for u in frontier:
            if len(u) >= k - 1:
                continue
            for g in letters:
                w = u + g
                if w not in seen and not _extension_blocked(w, by_len):
                    seen.add(w)
                    states.append(w)
                    nxt.append(w)
        frontier = nxt

    def successors(u: Word) -> Iterator[Word]:
        for g in letters:
            w = u + g
            if _extension_blocked(w, by_len):
                continue
            yield w if len(w) <= k - 1 else w[1:]

    # cycle detection: iterative three-color DFS
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {s: WHITE for s in states}
    for root in states:
        if color[root] != WHITE:
            continue
        stack: list[tuple[Word, Iterator[Word]]] = [(root, successors(root))]
        color[root] = GRAY
        while stack:
            node, it = stack[-1]
            advanced = False
            for nb in it:
                cc = color[nb]
                if cc == GRAY:
                    return QuotientDim("infinite")
                if cc == WHITE:
                    color[nb] = GRAY
                    stack.append((nb, successors(nb)))
                    advanced = True
                    break
            if not advanced:
                color[node] = BLACK
                stack.pop()
    # acyclic: the quotient is finite; enumerate to closure
    report = normal_words(basis, max_length)
    if not report.closed:
        return QuotientDim("unknown", max_length=max_length)
    return QuotientDim("finite", report.total)


# --- independent linear-algebra membership oracle -------------------------------


class LinearSpan:
    """Row space over the rationals with word coordinates, kept triangular.

    Every stored row is monic at its maximal word and those pivot words are
    pairwise distinct, so v lies in the span iff repeated elimination of
    the maximal word of v terminates at zero.
    """

    def __init__(self, order: DegLexOrder):
        self._order = order
        self._rows: dict[Word, dict[Word, Scalar]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _eliminate(self, vec: dict[Word, Scalar]) -> dict[Word, Scalar]:
        key = self._order.key
        rows = self._rows
        while vec:
            w = max(vec, key=key)
            row = rows.get(w)
            if row is None:
                return vec
            c = vec.pop(w)
            for rw, rc in row.items():
                if rw == w:
                    continue
                acc = vec.get(rw, 0) - c * rc
                if acc:
                    vec[rw] = acc
                elif rw in vec:
                    del vec[rw]
        return vec

    def insert(self, vec: dict[Word, Scalar]) -> bool:
        """Add a vector; returns True when it enlarges the span."""
        vec = {w: c for w, c in vec.items() if c}
        vec = self._eliminate(vec)
        if not vec:
            return False
        w = max(vec, key=self._order.key)
        lc = vec[w]
        if lc != 1:
            inv = Fraction(1, lc) if isinstance(lc, int) else 1 / lc
            vec = {u: _norm(c * inv) for u, c in vec.items()}
        self._rows[w] = vec
        return True

    def contains(self, p: "Poly | dict[Word, Scalar]") -> bool:
        vec = dict(p.items()) if isinstance(p, Poly) else dict(p)
        return not self._eliminate(vec)


def _words_of_length(alphabet: Alphabet, length: int) -> list[Word]:
    return ["".join(t) for t in product(list(alphabet.letters()), repeat=length)]


def ideal_row_space(
    generators: Sequence[Poly],
    truncation_degree: int,
    order: DegLexOrder,
    max_rows: int = 400_000,
) -> LinearSpan:
    """Exact linear span of {a*g*b : total degree <= truncation_degree}.

    Independent of the rewriting machinery by construction: only the raw
    generators and word enumeration are used.
    """
    alphabet = order.alphabet
    k = alphabet.size
    degs = [g.degree() for g in generators if g]
    total_rows = 0
    for dg in degs:
        for t in range(truncation_degree - dg + 1):
            total_rows += (t + 1) * (k**t)
    if total_rows > max_rows:
        raise ValueError(
            f"truncation too large: {total_rows} product rows exceed the cap {max_rows}"
        )
    words_cache: dict[int, list[Word]] = {}

    def words(n: int) -> list[Word]:
        if n not in words_cache:
            words_cache[n] = _words_of_length(alphabet, n)
        return words_cache[n]

    span = LinearSpan(order)
    for g in generators:
        if not g:
            continue
        dg = g.degree()
        items = list(g.items())
        for t in range(truncation_degree - dg + 1):
            for la in range(t + 1):
                lb = t - la
                for a in words(la):
                    for b in words(lb):
                        span.insert({a + w + b: c for w, c in items})
    return span


def linalg_membership(
    p: Poly,
    generators: Sequence[Poly],
    truncation_degree: int,
    order: DegLexOrder,
    max_rows: int = 400_000,
) -> str:
    """Membership test by exact linear algebra: "member" or "unknown".

    A "member" answer is a certificate that p is a rational combination of
    words-times-generators-times-words within the truncation degree;
    "unknown" only means no combination exists within that degree.
    """
    if truncation_degree < 0:
        raise ValueError("truncation degree must be nonnegative")
    if p and p.degree() > truncation_degree:
        raise ValueError("truncation degree is below the degree of p")
    if not p:
        return "member"
    span = ideal_row_space(generators, truncation_degree, order, max_rows)
    return "member" if span.contains(p) else "unknown"


# --- serialization ---------------------------------------------------------------


def basis_to_text(basis: GroebnerBasis) -> str:
    """Serialize a basis: header lines then one polynomial per line."""
    a = basis.order.alphabet
    lines = ["order: deglex"]
    if basis.order.ranking is not None:
        lines.append("ranking: " + " ".join(map(str, basis.order.ranking)))
    lines.append(f"generators: {a.vertices} {a.outputs}")
    lines.append(f"status: {basis.status}")
    for r in basis.rules:
        lines.append(poly_to_text(r.poly, a, basis.order))
    return "\n".join(lines) + "\n"


def basis_from_text(text: str) -> GroebnerBasis:
    lines = text.splitlines()
    idx = 0

    def take(prefix: str) -> str:
        nonlocal idx
        if idx >= len(lines) or not lines[idx].startswith(prefix):
            raise ValueError(f"basis file line {idx + 1}: expected {prefix!r} header")
        val = lines[idx][len(prefix):].strip()
        idx += 1
        return val

    order_name = take("order:")
    if order_name != "deglex":
        raise ValueError(f"unsupported monomial order {order_name!r}")
    ranking: tuple[int, ...] | None = None
    if idx < len(lines) and lines[idx].startswith("ranking:"):
        ranking = tuple(int(t) for t in lines[idx][len("ranking:"):].split())
        idx += 1
    n_m = take("generators:").split()
    if len(n_m) != 2:
        raise ValueError("generators header must carry two integers")
    alphabet = Alphabet(int(n_m[0]), int(n_m[1]))
    status = BasisStatus.parse(take("status:"))
    order = DegLexOrder(alphabet, ranking)
    rules = []
    for lineno in range(idx, len(lines)):
        ln = lines[lineno]
        if not ln.strip():
            continue
        try:
            p = parse_poly(ln, alphabet)
        except ValueError as e:
            raise ValueError(f"basis file line {lineno + 1}: {e}") from None
        if not p:
            raise ValueError(f"basis file line {lineno + 1}: zero polynomial")
        lead, lc = p.leading_term(order)
        if lc != 1:
            raise ValueError(f"basis file line {lineno + 1}: non-monic rule {ln!r}")
        rules.append(RewriteRule.from_poly(p, order))
    return GroebnerBasis(order, tuple(rules), status)
