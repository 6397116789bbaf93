"""Acceptance gate: one test per criterion, exact equality, zero tolerance.

Each test prints a single "criterion N: PASS/FAIL" line; run with -v (or -s)
to see them.  Criterion 10 is a stretch target: it is reported and, since
the engine handles it quickly, also asserted.
"""

import random
import time
from fractions import Fraction

from syncalg.freealg import Alphabet, DegLexOrder, Poly, generator
from syncalg.games import game_ideal, lc_ideal
from syncalg.graphs import (
    cartesian_product,
    complete_graph,
    coloring_game,
    cycle_graph,
    strong_product,
    suspension,
    tensor_product,
)
from syncalg.ncgb import (
    complete,
    ideal_row_space,
    interreduce,
    is_member,
    iter_normal_words,
    quotient_dimension,
    GroebnerBasis,
    COMPLETE,
)
from syncalg.chromatic import (
    chi_alg,
    chi_lc,
    clique_formula_dim,
    coloring_functional_check,
    coloring_ideal,
    dim_lc,
    generate_k4_relations,
    verify_k4_groebner,
)


def _report(num, ok, detail=""):
    tail = f" - {detail}" if detail else ""
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'}{tail}")
    assert ok, f"criterion {num} failed{tail}"


def _complete_ideal(g, colors, flavor="plain", max_degree=12):
    game = coloring_game(g, colors)
    spec = game_ideal(game) if flavor == "plain" else lc_ideal(game)
    order = DegLexOrder(spec.alphabet)
    return complete(spec.generators, order, max_degree), spec


def test_criterion_01_unit_in_three_coloring_ideal_of_k4():
    t0 = time.monotonic()
    gb, _ = _complete_ideal(complete_graph(4), 3)
    dt = time.monotonic() - t0
    ok = gb.contains_unit() and dt < 60
    _report(1, ok, f"constant derived in {dt:.2f}s (budget 60s)")


def test_criterion_02_chi_alg_ladder():
    t0 = time.monotonic()
    values = {j: chi_alg(complete_graph(j)).value for j in (1, 2, 3, 4, 5)}
    ladder_ok = values == {1: 1, 2: 2, 3: 3, 4: 4, 5: 4}
    five = chi_alg(complete_graph(5))
    # the K_5 lower bound must come from the verified complete-graph unit
    # pushed along a clique embedding, together with a passing size-5 run
    clique_cert = any(
        c.colors == 3 and c.unit_derived and "clique" in c.via
        for c in five.lower_certificates
    )
    verified5 = verify_k4_groebner(5).passed
    # relabeling a four-vertex generator by an injection lands on a
    # five-vertex generator, which is what makes the transfer sound
    small = game_ideal(coloring_game(complete_graph(4), 3))
    big = game_ideal(coloring_game(complete_graph(5), 3))
    big_set = {frozenset(p.items()) for p in big.generators}
    inject_ok = all(
        frozenset(p.items()) in big_set for p in small.generators
    )  # identity injection: letters of the small alphabet keep their codes
    dt = time.monotonic() - t0
    ok = ladder_ok and clique_cert and verified5 and inject_ok and dt < 600
    _report(2, ok, f"chi_alg values {values}, transfer certified, {dt:.1f}s")


def test_criterion_03_four_color_basis_verification():
    times = {}
    all_ok = True
    for n in (3, 4, 5, 6):
        t0 = time.monotonic()
        rep = verify_k4_groebner(n)
        times[n] = time.monotonic() - t0
        all_ok = all_ok and rep.passed
    ok = all_ok and times[6] < 7200
    _report(3, ok, "sizes 3..6 passed, " + ", ".join(
        f"n={n}: {t:.1f}s" for n, t in times.items()))


def test_criterion_04_dimension_table():
    k = complete_graph
    table = {
        (1, 1): 1, (1, 2): 2, (1, 3): 3, (1, 4): 4, (1, 5): 5,
        (2, 2): 2, (2, 3): 6, (3, 3): 6, (3, 4): 24, (4, 4): 24, (4, 3): 0,
    }
    results = {}
    ok = True
    for (n, c), want in table.items():
        t0 = time.monotonic()
        rep = dim_lc(k(n), k(c))
        dt = time.monotonic() - t0
        got = rep.dim.count if rep.dim.kind == "finite" else rep.dim.kind
        results[(n, c)] = got
        ok = ok and got == want and dt < 300 and rep.agrees is True
    _report(4, ok, f"all {len(table)} entries exact")


def test_criterion_05_pentagon_dimension_two_ways():
    rep = dim_lc(complete_graph(2), cycle_graph(5))
    formula = clique_formula_dim(2, cycle_graph(5))
    ok = rep.dim.kind == "finite" and rep.dim.count == 10 and formula == 10
    _report(5, ok, f"enumeration {rep.dim.count}, closed form {formula}")


def test_criterion_06_structural_identities():
    k = complete_graph
    checks = []
    for base in (k(1), k(2)):
        for c in (2, 3, 4):
            left = dim_lc(suspension(base), k(c)).dim
            right = dim_lc(base, k(c - 1)).dim
            checks.append(
                left.kind == "finite" and right.kind == "finite"
                and left.count == c * right.count
            )
    mult = dim_lc(k(2), tensor_product(k(2), k(2))).dim
    checks.append(mult.count == 4)
    checks.append(chi_lc(strong_product(k(2), k(2))).value == 4)
    checks.append(chi_lc(cartesian_product(k(2), k(3))).value == 3)
    _report(6, all(checks), f"{len(checks)} identities hold exactly")


def test_criterion_07_chi_lc_ladder():
    t0 = time.monotonic()
    k = complete_graph
    values_ok = all(chi_lc(k(n)).value == n for n in (1, 2, 3, 4))
    units_ok = True
    functionals_ok = True
    for n in (2, 3, 4):
        gb, _ = _complete_ideal(k(n), n - 1, "locally-commuting")
        units_ok = units_ok and gb.contains_unit()
    for n in (1, 2, 3, 4):
        spec = coloring_ideal(k(n), n, "locally-commuting")
        functionals_ok = functionals_ok and coloring_functional_check(
            k(n), k(n), list(range(n)), spec
        )
    dt = time.monotonic() - t0
    ok = values_ok and units_ok and functionals_ok and dt < 600
    _report(7, ok, f"values, unit certificates, functionals in {dt:.1f}s")


# --- criterion 8: property suites, 10 000 randomized cases each, fixed seed ----


def _random_poly(rng, alphabet, max_terms=3, max_len=4):
    letters = list(alphabet.letters())
    terms = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        w = "".join(rng.choice(letters) for _ in range(rng.randrange(0, max_len + 1)))
        c = Fraction(rng.randrange(-3, 4), rng.randrange(1, 3))
        if c:
            terms[w] = terms.get(w, 0) + c
    return Poly({w: c for w, c in terms.items() if c})


def test_criterion_08a_normal_form_idempotence_and_linearity():
    rng = random.Random(80801)
    bases = [
        _complete_ideal(complete_graph(3), 3)[0],
        _complete_ideal(complete_graph(2), 3, "locally-commuting")[0],
        _complete_ideal(cycle_graph(4), 2)[0],
    ]
    for i in range(10_000):
        gb = bases[i % len(bases)]
        a = gb.order.alphabet
        p = _random_poly(rng, a)
        q = _random_poly(rng, a)
        alpha = Fraction(rng.randrange(-2, 3), rng.randrange(1, 3))
        np_, nq = gb.normal_form(p), gb.normal_form(q)
        assert gb.normal_form(np_) == np_
        assert gb.normal_form(alpha * p + q) == alpha * np_ + nq
    _report("8a", True, "10000 idempotence and linearity cases")


def test_criterion_08b_reduced_basis_canonicity():
    rng = random.Random(80802)
    sources = [
        game_ideal(coloring_game(complete_graph(1), 2)),
        game_ideal(coloring_game(complete_graph(2), 2)),
        game_ideal(coloring_game(complete_graph(2), 3)),
        lc_ideal(coloring_game(complete_graph(2), 2)),
    ]
    refs = []
    for spec in sources:
        order = DegLexOrder(spec.alphabet)
        refs.append(
            [r.poly for r in complete(spec.generators, order, 12).rules]
        )
    for i in range(10_000):
        j = i % len(sources)
        spec, ref = sources[j], refs[j]
        gens = list(spec.generators)
        rng.shuffle(gens)
        threads = 2 if i % 97 == 0 else (3 if i % 193 == 0 else 1)
        gb = complete(gens, DegLexOrder(spec.alphabet), 12, threads=threads)
        assert [r.poly for r in gb.rules] == ref, f"case {i} diverged"
    _report("8b", True, "10000 permuted completions agree, threads varied")


def _acceptance_bases():
    k = complete_graph
    bases = []
    for n, c in ((1, 2), (1, 5), (2, 2), (2, 3), (3, 3), (3, 4), (4, 4), (4, 3)):
        bases.append(_complete_ideal(k(n), c, "locally-commuting")[0])
    bases.append(_complete_ideal(k(3), 3)[0])
    bases.append(_complete_ideal(k(4), 3)[0])
    bases.append(_complete_ideal(k(2), 3)[0])
    for n in (2, 3, 4):
        bases.append(_complete_ideal(k(n), n - 1, "locally-commuting")[0])
    from syncalg.chromatic import homomorphism_ideal

    spec = homomorphism_ideal(k(2), cycle_graph(5), "locally-commuting")
    bases.append(complete(spec.generators, DegLexOrder(spec.alphabet), 12))
    for n in (3, 4, 5, 6):
        order = DegLexOrder(Alphabet(n, 4))
        rules = interreduce(generate_k4_relations(n), order)
        bases.append(GroebnerBasis(order, rules, COMPLETE))
    return bases


def test_criterion_08c_normal_word_subword_closure():
    rng = random.Random(80803)
    total = 0
    pools = []
    for gb in _acceptance_bases():
        seen = set(iter_normal_words(gb, 6))
        for w in seen:
            # closure under facets gives closure under all factors
            assert not w or (w[:-1] in seen and w[1:] in seen)
        total += len(seen)
        if seen:
            pools.append((sorted(seen), seen))
    for _ in range(10_000):
        ordered, seen = pools[rng.randrange(len(pools))]
        w = ordered[rng.randrange(len(ordered))]
        i = rng.randrange(len(w) + 1)
        j = rng.randrange(i, len(w) + 1)
        assert w[i:j] in seen
    _report("8c", True, f"{total} words enumerated exhaustively to length 6")


def test_criterion_08d_deglex_order_laws():
    rng = random.Random(80804)
    for i in range(10_000):
        vertices = rng.randrange(1, 4)
        outputs = rng.randrange(1, 5)
        a = Alphabet(vertices, outputs)
        ranking = None
        if i % 3 == 0:
            ranking = list(range(a.size))
            rng.shuffle(ranking)
        order = DegLexOrder(a, ranking)
        letters = list(a.letters())
        rand_word = lambda top: "".join(
            rng.choice(letters) for _ in range(rng.randrange(0, top))
        )
        u, v, w = rand_word(6), rand_word(6), rand_word(6)
        cu_v, cv_u = order.compare(u, v), order.compare(v, u)
        assert (cu_v == 0) == (u == v)
        assert cu_v == -cv_u
        x, y, z = sorted((u, v, w), key=order.key)
        assert order.compare(x, y) <= 0 <= order.compare(z, y)
        if len(u) < len(v):
            assert order.compare(u, v) < 0
        if order.compare(u, v) < 0:
            f, g = rand_word(3), rand_word(3)
            assert order.compare(f + u + g, f + v + g) < 0
            assert order.heap_key(u) > order.heap_key(v)
        assert order.max_word([u, v, w]) == z
    _report("8d", True, "10000 order-law cases incl. random rankings")


def test_criterion_08e_commutator_vanishing():
    rng = random.Random(80805)
    gb, spec = _complete_ideal(complete_graph(2), 3)
    a = spec.alphabet
    comms = []
    for i in range(3):
        for j in range(3):
            x, y = generator(a, 0, i), generator(a, 1, j)
            comms.append(x * y - y * x)
    for c in comms:
        assert not gb.normal_form(c)
    letters = list(a.letters())
    for _ in range(10_000):
        c = comms[rng.randrange(9)]
        u = Poly({"".join(rng.choice(letters) for _ in range(rng.randrange(0, 4))): 1})
        w = Poly({"".join(rng.choice(letters) for _ in range(rng.randrange(0, 4))): 1})
        assert not gb.normal_form(u * c * w)
    _report("8e", True, "9 commutators and 10000 framed products vanish")


def test_criterion_09_oracle_agreement():
    rng = random.Random(909)
    k = complete_graph
    ideals = [
        game_ideal(coloring_game(k(2), 3)),
        game_ideal(coloring_game(k(3), 3)),
        lc_ideal(coloring_game(k(2), 3)),
        game_ideal(coloring_game(k(4), 3)),
    ]
    spans = []
    bases = []
    for spec in ideals:
        order = DegLexOrder(spec.alphabet)
        spans.append(ideal_row_space(spec.generators, 3, order))
        bases.append(complete(spec.generators, order, 12))
    checked = 0
    disagreements = 0
    while checked < 200:
        j = rng.randrange(len(ideals))
        spec, span, gb = ideals[j], spans[j], bases[j]
        letters = list(spec.alphabet.letters())
        g = spec.generators[rng.randrange(len(spec.generators))]
        room = 3 - g.degree()
        la = rng.randrange(0, room + 1)
        lb = rng.randrange(0, room - la + 1)
        a = Poly({"".join(rng.choice(letters) for _ in range(la)): 1})
        b = Poly({"".join(rng.choice(letters) for _ in range(lb)): 1})
        p = a * g * b
        if not p:
            continue
        gb_says = is_member(p, gb).kind
        la_says = "member" if span.contains(p) else "unknown"
        if not (gb_says == "member" and la_says == "member"):
            disagreements += 1
        checked += 1
    _report(9, disagreements == 0, f"200 visible combinations, both oracles agree")


def test_criterion_10_stretch_strong_product_unit():
    # stretch case; the larger pentagon-strong-triangle instance stays excluded
    g = strong_product(cycle_graph(5), complete_graph(2))
    t0 = time.monotonic()
    gb, _ = _complete_ideal(g, 4, "locally-commuting")
    dt = time.monotonic() - t0
    _report(10, gb.contains_unit(), f"four-color unit in {dt:.1f}s (stretch)")
