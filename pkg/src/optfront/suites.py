"""Named property suites with their expected verdicts.

Each suite is a list of properties wired to generators.  An entry declares
whether it is expected to pass or to be falsified: several properties in the
catalog are deliberate refutations (totality of dominance, transitivity of
indifference, the monotonicity failures of structural measures), and a run
only counts as green when the observed verdict matches the declared one.

Every property gets its own child seed derived from the suite seed and the
property name, so runs are reproducible and independent of suite ordering.
"""

from __future__ import annotations

import random
import zlib
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

from . import finset, measures, minu, pareto
from . import quickprop as qp
from .quickprop import CheckResult, NamedFn, Outcome, Rng
from .uncertain import (
    IdU,
    SimpleProb,
    generic_all,
    generic_any,
    generic_elem,
    generic_shape,
    is_valid,
    same_shape,
    strict_dom,
    zip_u,
)

EXPECT_PASS = "pass"
EXPECT_FALSIFY = "falsify"


@dataclass(frozen=True)
class PropEntry:
    name: str
    expect: str
    run: Callable[[int, Rng], CheckResult]


@dataclass(frozen=True)
class SuiteRow:
    suite: str
    name: str
    expect: str
    result: CheckResult

    @property
    def ok(self) -> bool:
        if self.expect == EXPECT_PASS:
            return self.result.outcome is Outcome.PASSED
        return self.result.outcome is Outcome.FALSIFIED


def _child_seed(suite: str, prop: str, seed: int) -> int:
    tag = zlib.crc32(f"{suite}/{prop}".encode())
    return (seed * 0x9E3779B97F4A7C15 + tag) & 0xFFFFFFFFFFFFFFFF


def _checked(gen, prop) -> Callable[[int, Rng], CheckResult]:
    return lambda n, rng: qp.check(n, gen, prop, rng)


def _splat(prop) -> Callable:
    return lambda case: prop(*case)


# ---------------------------------------------------------------------------
# Shared generators and fixtures
# ---------------------------------------------------------------------------

_int10 = qp.gen_int(-10, 10)
_int5 = qp.gen_int(-5, 5)
_vec2 = qp.gen_vec(2, _int5)
_vec3 = qp.gen_vec(3, _int5)
_sets_int = qp.gen_nonempty_finset(_int10, 8)
_sets_vec2 = qp.gen_finset(_vec2, 0, 7)
_sets_pairs = qp.gen_nonempty_finset(_vec2, 7)

_POOL_RNG = qp.rng_from_seed(0x0F0E_1D2C_3B4A)
FUNCTION_POOL: Tuple[NamedFn, ...] = (
    NamedFn("identity", lambda x: x),
    NamedFn("negate", lambda x: -x),
    NamedFn("square", lambda x: x * x),
    NamedFn("mod-3", lambda x: x % 3),
    NamedFn("const-7", lambda x: 7),
    qp.gen_table_fun(-10, 10, qp.gen_int(-20, 20), _POOL_RNG, "table-a"),
    qp.gen_table_fun(-10, 10, qp.gen_int(-20, 20), _POOL_RNG, "table-b"),
)

# The seven-point toy configuration whose front is the four p-points; the
# q-points are each dominated.  Used by the `figure1` CLI report and the
# acceptance suite.
TOY_POINTS: Dict[str, tuple] = {
    "p1": (-1.0, 2.5),
    "p2": (1.0, 0.75),
    "p3": (1.5, -0.5),
    "p4": (3.5, -1.0),
    "q1": (1.0, 1.5),
    "q2": (2.0, 0.5),
    "q3": (2.5, 2.0),
}
TOY_FRONT_NAMES = ("p1", "p2", "p3", "p4")


def toy_caption_checks() -> List[Tuple[str, bool, bool]]:
    """(statement, expected, observed) rows for the toy configuration."""
    p = TOY_POINTS
    ind = finset.indifference(pareto.dominates)
    rows = [
        ("p2 ≺ q1", True, pareto.dominates(p["p2"], p["q1"])),
        ("p2 ≺ q3", True, pareto.dominates(p["p2"], p["q3"])),
        ("p3 ≺ q2", True, pareto.dominates(p["p3"], p["q2"])),
        ("p3 ≺ q3", True, pareto.dominates(p["p3"], p["q3"])),
        ("q1 indifferent p1", True, ind(p["q1"], p["p1"])),
        ("p1 indifferent q3", True, ind(p["p1"], p["q3"])),
        ("q1 ≺ q3", True, pareto.dominates(p["q1"], p["q3"])),
    ]
    return rows


def minimal_elements(xs: Sequence) -> list:
    """Dominance-minimal elements by exhaustive pairwise comparison.

    Independent of the incremental front computation; used to cross-check it.
    """
    return [x for x in xs if not any(pareto.dominates(y, x) for y in xs)]


# ---------------------------------------------------------------------------
# Suite builders
# ---------------------------------------------------------------------------

def _core_suite() -> List[PropEntry]:
    entries = []
    for fn in FUNCTION_POOL:
        entries.append(
            PropEntry(
                f"min-lower-bound[{fn.name}]",
                EXPECT_PASS,
                _checked(_sets_int, lambda xs, f=fn: finset.prop_min_lower_bound(f, xs)),
            )
        )
        entries.append(
            PropEntry(
                f"argmin-sound[{fn.name}]",
                EXPECT_PASS,
                _checked(_sets_int, lambda xs, f=fn: finset.prop_argmin_sound(f, xs)),
            )
        )
        entries.append(
            PropEntry(
                f"argmin-complete[{fn.name}]",
                EXPECT_PASS,
                _checked(_sets_int, lambda xs, f=fn: finset.prop_argmin_complete(f, xs)),
            )
        )

    fn_and_set = qp.gen_tuple(qp.gen_choice(FUNCTION_POOL), _sets_int)
    entries.append(
        PropEntry(
            "min-in-image",
            EXPECT_PASS,
            _checked(
                fn_and_set,
                _splat(lambda f, xs: finset.contains([f(x) for x in xs], finset.minimum(f, xs))),
            ),
        )
    )
    entries.append(
        PropEntry(
            "argmin-within-inputs",
            EXPECT_PASS,
            _checked(fn_and_set, _splat(lambda f, xs: finset.is_subset(finset.argmin(f, xs), xs))),
        )
    )

    def shuffled_case(rng: Rng):
        f = FUNCTION_POOL[int(rng.random() * len(FUNCTION_POOL))]
        xs = _sets_int(rng)
        perm = list(xs)
        rng.shuffle(perm)
        return f, xs, perm

    entries.append(
        PropEntry(
            "argmin-permutation-insensitive",
            EXPECT_PASS,
            _checked(
                shuffled_case,
                _splat(lambda f, xs, perm: finset.set_equal(finset.argmin(f, xs), finset.argmin(f, perm))),
            ),
        )
    )
    return entries


def _relations_suite() -> List[PropEntry]:
    dom = pareto.dominates
    ind = finset.indifference(dom)
    pairs = qp.gen_tuple(_vec2, _vec2)
    triples = qp.gen_tuple(_vec2, _vec2, _vec2)
    return [
        PropEntry(
            "dominance-anti-reflexive",
            EXPECT_PASS,
            _checked(_vec2, finset.anti_reflexive(dom)),
        ),
        PropEntry("dominance-transitive", EXPECT_PASS, _checked(triples, finset.transitive(dom))),
        PropEntry("dominance-not-total", EXPECT_FALSIFY, _checked(pairs, finset.total(dom))),
        PropEntry(
            "indifference-reflexive",
            EXPECT_PASS,
            _checked(_vec2, lambda x: ind(x, x)),
        ),
        PropEntry(
            "indifference-symmetric",
            EXPECT_PASS,
            _checked(pairs, _splat(lambda x, y: ind(x, y) == ind(y, x))),
        ),
        PropEntry(
            "indifference-not-transitive",
            EXPECT_FALSIFY,
            _checked(triples, finset.transitive(ind)),
        ),
    ]


def _front_suite() -> List[PropEntry]:
    def antichain_case(rng: Rng):
        return _vec2(rng), pareto.pareto_front(_sets_vec2(rng))

    def domination_case(rng: Rng):
        xs = _sets_vec2(rng)
        k = int(rng.random() * 4)
        ys = []
        for _ in range(k):
            if xs and rng.random() < 0.75:
                bx, by = xs[int(rng.random() * len(xs))]
                ox, oy = int(rng.random() * 3), int(rng.random() * 3)
                if ox == 0 and oy == 0:
                    ox = oy = 1
                ys.append((bx + ox, by + oy))
            else:
                ys.append(_vec2(rng))
        return _vec2(rng), xs, ys

    def permuted_case(rng: Rng):
        xs = _sets_vec2(rng)
        perm = list(xs)
        rng.shuffle(perm)
        return xs, perm

    small12_2d = qp.gen_finset(qp.gen_vec(2, qp.gen_int(-4, 4)), 0, 12)
    small12_3d = qp.gen_finset(qp.gen_vec(3, qp.gen_int(-4, 4)), 0, 12)

    def scan_agrees(xs):
        return finset.set_equal(pareto.pareto_front(xs), minimal_elements(xs))

    return [
        PropEntry(
            "bump-subset",
            EXPECT_PASS,
            _checked(qp.gen_tuple(_vec2, _sets_vec2), _splat(pareto.prop_bump_subset)),
        ),
        PropEntry(
            "bump-keeps-indifference",
            EXPECT_PASS,
            _checked(antichain_case, _splat(pareto.prop_bump_keeps_indifference)),
        ),
        PropEntry(
            "bump-keeps-domination",
            EXPECT_PASS,
            _checked(domination_case, _splat(pareto.prop_bump_keeps_domination)),
        ),
        PropEntry("front-is-pareto", EXPECT_PASS, _checked(_sets_vec2, pareto.prop_front_is_pareto)),
        PropEntry(
            "front-permutation-insensitive",
            EXPECT_PASS,
            _checked(
                permuted_case,
                _splat(lambda xs, perm: finset.set_equal(pareto.pareto_front(xs), pareto.pareto_front(perm))),
            ),
        ),
        PropEntry(
            "merge-law",
            EXPECT_PASS,
            _checked(qp.gen_tuple(_sets_vec2, _sets_vec2), _splat(pareto.prop_merge_law)),
        ),
        PropEntry("front-matches-pairwise-scan-2d", EXPECT_PASS, _checked(small12_2d, scan_agrees)),
        PropEntry("front-matches-pairwise-scan-3d", EXPECT_PASS, _checked(small12_3d, scan_agrees)),
        PropEntry(
            "merge-law-small-vectors",
            EXPECT_PASS,
            _checked(qp.gen_tuple(small12_2d, small12_2d), _splat(pareto.prop_merge_law)),
        ),
    ]


_testfun = NamedFn("x-plus-xy", lambda p: p[0] + p[1] * p[0])
_components = (
    NamedFn("const-0", lambda p: 0),
    NamedFn("fst", lambda p: p[0]),
    NamedFn("snd", lambda p: p[1]),
)
_identity2 = NamedFn("identity", lambda p: p)


def _moo_suite() -> List[PropEntry]:
    return [
        PropEntry(
            "front-of-image",
            EXPECT_PASS,
            _checked(_sets_pairs, lambda xs: pareto.prop_front_of_image(_identity2, xs)),
        ),
        PropEntry(
            "argfront-sound",
            EXPECT_PASS,
            _checked(_sets_pairs, lambda xs: pareto.prop_argfront_sound(_identity2, xs)),
        ),
        PropEntry(
            "argfront-complete",
            EXPECT_PASS,
            _checked(_sets_pairs, lambda xs: pareto.prop_argfront_complete(_identity2, xs)),
        ),
        PropEntry(
            "single-objective-front",
            EXPECT_PASS,
            _checked(_sets_pairs, lambda xs: pareto.prop_single_front_is_min(_testfun, xs)),
        ),
        PropEntry(
            "single-objective-argfront",
            EXPECT_PASS,
            _checked(_sets_pairs, lambda xs: pareto.prop_single_argfront_is_argmin(_testfun, xs)),
        ),
        PropEntry(
            "component-min-attained",
            EXPECT_PASS,
            _checked(_sets_pairs, lambda xs: pareto.prop_component_min_attained(_components, xs)),
        ),
        PropEntry(
            "component-argmin-subset",
            EXPECT_FALSIFY,
            _checked(_sets_pairs, lambda xs: pareto.prop_component_argmin_subset(_components, xs)),
        ),
    ]


def _uncertain_suite() -> List[PropEntry]:
    seqs = qp.gen_seq(_int5, 1, 4)
    seqs0 = qp.gen_seq(_int5, 0, 8)
    dyadic = qp.gen_dyadic(-5, 5)
    ivs = qp.gen_interval(dyadic)
    bools = qp.gen_choice((False, True))
    bool_seq = qp.gen_seq(bools, 0, 8)

    def reweighted_case(rng: Rng):
        sp1 = qp.gen_simple_prob(qp.gen_int(0, 6), 1, 4)(rng)
        sp2 = qp.gen_simple_prob(qp.gen_int(3, 9), 1, 4)(rng)

        def reweigh(sp):
            raw = [0.05 + rng.random() for _ in sp.pairs]
            total = sum(raw)
            return SimpleProb(tuple((v, w / total) for (v, _), w in zip(sp.pairs, raw)))

        return sp1, sp2, reweigh(sp1), reweigh(sp2)

    def same_len_seqs(rng: Rng):
        k = 1 + int(rng.random() * 4)
        return [_int5(rng) for _ in range(k)], [_int5(rng) for _ in range(k)]

    def dom_triple(rng: Rng):
        # Half the cases stack the sequences with small random gaps so the
        # transitivity antecedent is exercised often; gap 0 breaks the chain.
        u1 = seqs(rng)
        if rng.random() < 0.5:
            return u1, seqs(rng), seqs(rng)
        u2 = seqs(rng)
        g2 = int(rng.random() * 3)
        u2 = [x - min(u2) + max(u1) + g2 for x in u2]
        u3 = seqs(rng)
        g3 = int(rng.random() * 3)
        u3 = [x - min(u3) + max(u2) + g3 for x in u3]
        return u1, u2, u3

    return [
        PropEntry(
            "seq-dom-anti-reflexive",
            EXPECT_PASS,
            _checked(seqs, lambda u: not strict_dom(u, u)),
        ),
        PropEntry(
            "seq-dom-transitive",
            EXPECT_PASS,
            _checked(dom_triple, finset.transitive(strict_dom)),
        ),
        PropEntry(
            "seq-dom-not-total",
            EXPECT_FALSIFY,
            _checked(qp.gen_tuple(seqs, seqs), finset.total(strict_dom)),
        ),
        PropEntry(
            "interval-dom-endpoint-rule",
            EXPECT_PASS,
            _checked(
                qp.gen_tuple(ivs, ivs),
                _splat(lambda i1, i2: strict_dom(i1, i2) == (i1.end < i2.start)),
            ),
        ),
        PropEntry(
            "sp-dom-ignores-weights",
            EXPECT_PASS,
            _checked(
                reweighted_case,
                _splat(
                    lambda a, b, a2, b2: strict_dom(a, b) == strict_dom(a2, b2)
                    and strict_dom(b, a) == strict_dom(b2, a2)
                ),
            ),
        ),
        PropEntry(
            "generic-membership-agrees",
            EXPECT_PASS,
            _checked(
                qp.gen_tuple(_int5, seqs0),
                _splat(lambda a, u: generic_elem(a, u) == finset.contains(u, a)),
            ),
        ),
        PropEntry(
            "generic-all-agrees",
            EXPECT_PASS,
            _checked(bool_seq, lambda u: generic_all(u) == all(u)),
        ),
        PropEntry(
            "generic-any-agrees",
            EXPECT_PASS,
            _checked(bool_seq, lambda u: generic_any(u) == any(u)),
        ),
        PropEntry(
            "generic-shape-agrees",
            EXPECT_PASS,
            _checked(
                qp.gen_tuple(seqs0, seqs0),
                _splat(lambda u1, u2: same_shape(u1, u2) == (generic_shape(u1) == generic_shape(u2))),
            ),
        ),
        PropEntry(
            "zip-projects-back",
            EXPECT_PASS,
            _checked(
                same_len_seqs,
                _splat(lambda u1, u2: [a for a, _ in zip_u(u1, u2)] == u1),
            ),
        ),
    ]


def _generators_suite() -> List[PropEntry]:
    ivs = qp.gen_interval(qp.gen_dyadic(-5, 5))
    sps = qp.gen_simple_prob(qp.gen_int(-5, 5), 1, 6)
    pdfs = qp.gen_hist_pdf(qp.gen_dyadic(-5, 5), 1, 5)

    def stream_repeats(seed_case: int):
        r1 = qp.rng_from_seed(seed_case)
        r2 = qp.rng_from_seed(seed_case)
        return [r1.random() for _ in range(50)] == [r2.random() for _ in range(50)]

    return [
        PropEntry("interval-generator-valid", EXPECT_PASS, _checked(ivs, is_valid)),
        PropEntry("simple-prob-generator-valid", EXPECT_PASS, _checked(sps, is_valid)),
        PropEntry("hist-pdf-generator-valid", EXPECT_PASS, _checked(pdfs, is_valid)),
        PropEntry(
            "seeded-stream-deterministic",
            EXPECT_PASS,
            _checked(qp.gen_int(0, 2**31), stream_repeats),
        ),
    ]


# -- monotonicity table -------------------------------------------------------

_seq_gen = qp.gen_seq(_int5, 1, 5)
_sp_gen = qp.gen_simple_prob(qp.gen_int(0, 4), 1, 5)
_iv_gen = qp.gen_interval(qp.gen_dyadic(-5, 5))
_pdf_gen = qp.gen_hist_pdf(qp.gen_dyadic(-5, 5), 1, 4)
_id_gen = qp.gen_map(IdU, _int5)

# (measure, expected M1 verdict, expected M2 verdict) per carrier
_const3 = measures.const(3)
MONOTONICITY_TABLE = {
    "seq": (
        _seq_gen,
        [
            (measures.seq_sum, EXPECT_PASS, EXPECT_PASS),
            (measures.seq_average, EXPECT_PASS, EXPECT_PASS),
            (measures.seq_head, EXPECT_PASS, EXPECT_PASS),
            (measures.seq_best, EXPECT_PASS, EXPECT_PASS),
            (measures.seq_worst, EXPECT_PASS, EXPECT_PASS),
            (measures.seq_length, EXPECT_PASS, EXPECT_FALSIFY),
            (_const3, EXPECT_PASS, EXPECT_FALSIFY),
        ],
    ),
    "sp": (
        _sp_gen,
        [
            (measures.sp_expected, EXPECT_PASS, EXPECT_PASS),
            (measures.sp_best, EXPECT_PASS, EXPECT_PASS),
            (measures.sp_worst, EXPECT_PASS, EXPECT_PASS),
            (measures.sp_most_likely, EXPECT_FALSIFY, EXPECT_PASS),
            (_const3, EXPECT_PASS, EXPECT_FALSIFY),
        ],
    ),
    "interval": (
        _iv_gen,
        [
            (measures.iv_sum, EXPECT_PASS, EXPECT_PASS),
            (measures.iv_average, EXPECT_PASS, EXPECT_PASS),
            (measures.iv_best, EXPECT_PASS, EXPECT_PASS),
            (measures.iv_worst, EXPECT_PASS, EXPECT_PASS),
            (measures.iv_width, EXPECT_PASS, EXPECT_FALSIFY),
            (_const3, EXPECT_PASS, EXPECT_FALSIFY),
        ],
    ),
    "pdf": (
        _pdf_gen,
        [
            (measures.pdf_expected, EXPECT_PASS, EXPECT_PASS),
            (measures.pdf_most_likely, EXPECT_PASS, EXPECT_PASS),
            (_const3, EXPECT_PASS, EXPECT_FALSIFY),
        ],
    ),
    "id": (
        _id_gen,
        [
            (measures.unwrap, EXPECT_PASS, EXPECT_PASS),
            (_const3, EXPECT_PASS, EXPECT_FALSIFY),
        ],
    ),
}


def _mono_suite(carrier: str, condition: str) -> List[PropEntry]:
    gen, rows = MONOTONICITY_TABLE[carrier]
    entries = []
    for m, expect_m1, expect_m2 in rows:
        if condition == "m1":
            entries.append(
                PropEntry(
                    f"pointwise-monotone[{m.name}]",
                    expect_m1,
                    lambda n, rng, m=m: measures.check_pointwise_monotone(gen, m, n, rng),
                )
            )
        else:
            entries.append(
                PropEntry(
                    f"dominance-monotone[{m.name}]",
                    expect_m2,
                    lambda n, rng, m=m: measures.check_dominance_monotone(gen, m, n, rng),
                )
            )
    return entries


# -- soundness of measure-based minimization ----------------------------------

_seq_domain = qp.gen_nonempty_finset(qp.gen_int(-2, 4), 6)
_bool_domain = qp.gen_nonempty_finset(qp.gen_choice((False, True)), 3)
_id_domain = qp.gen_nonempty_finset(qp.gen_int(-6, 6), 6)

_f_seq = NamedFn("two-branch-seq", minu.seq_example)
_f_sp = NamedFn("two-branch-sp", minu.sp_example)
_f_iv = NamedFn("two-branch-interval", minu.interval_example)
_f_pdf = NamedFn("two-branch-pdf", minu.pdf_example)

# expected verdict of the never-dominated property per (objective, measure)
MINU_TABLE = {
    "seq": (
        _seq_domain,
        _f_seq,
        [
            (measures.seq_sum, EXPECT_PASS),
            (measures.seq_average, EXPECT_PASS),
            (measures.seq_head, EXPECT_PASS),
            (measures.seq_best, EXPECT_PASS),
            (measures.seq_worst, EXPECT_PASS),
            (measures.seq_length, EXPECT_FALSIFY),
            (_const3, EXPECT_FALSIFY),
        ],
    ),
    "sp": (
        _bool_domain,
        _f_sp,
        [
            (measures.sp_expected, EXPECT_PASS),
            (measures.sp_best, EXPECT_PASS),
            (measures.sp_worst, EXPECT_PASS),
            (measures.sp_most_likely, EXPECT_PASS),
            (_const3, EXPECT_FALSIFY),
        ],
    ),
    "interval": (
        _bool_domain,
        _f_iv,
        [
            (measures.iv_sum, EXPECT_PASS),
            (measures.iv_average, EXPECT_PASS),
            (measures.iv_best, EXPECT_PASS),
            (measures.iv_worst, EXPECT_PASS),
            (measures.iv_width, EXPECT_FALSIFY),
            (_const3, EXPECT_FALSIFY),
        ],
    ),
    "pdf": (
        _bool_domain,
        _f_pdf,
        [
            (measures.pdf_expected, EXPECT_PASS),
            (measures.pdf_most_likely, EXPECT_PASS),
            (_const3, EXPECT_FALSIFY),
        ],
    ),
}


def _minu_suite(carrier: str) -> List[PropEntry]:
    domain, f, rows = MINU_TABLE[carrier]
    entries = []
    for m, expect31 in rows:
        entries.append(
            PropEntry(
                f"result-nonempty-subset[{m.name}]",
                EXPECT_PASS,
                _checked(domain, lambda xs, m=m: minu.prop_result_nonempty_subset(m, f, xs)),
            )
        )
        entries.append(
            PropEntry(
                f"never-dominated[{m.name}]",
                expect31,
                _checked(domain, lambda xs, m=m: minu.prop_result_never_dominated(m, f, xs)),
            )
        )
        entries.append(
            PropEntry(
                f"argmin-sound[{m.name}]",
                EXPECT_PASS,
                _checked(domain, lambda xs, m=m: minu.prop_argmin_uncertain_sound(m, f, xs)),
            )
        )
        entries.append(
            PropEntry(
                f"argmin-complete[{m.name}]",
                EXPECT_PASS,
                _checked(domain, lambda xs, m=m: minu.prop_argmin_uncertain_complete(m, f, xs)),
            )
        )
    return entries


def _identity_suite() -> List[PropEntry]:
    f = NamedFn("id-square", minu.identity_square)
    const7 = measures.const(7)
    entries = []
    for m, expect in ((measures.unwrap, EXPECT_PASS), (const7, EXPECT_FALSIFY)):
        entries.append(
            PropEntry(
                f"reduces-to-singleton[{m.name}]",
                expect,
                _checked(_id_domain, lambda xs, m=m: minu.prop_identity_singleton(m, f, xs)),
            )
        )
        entries.append(
            PropEntry(
                f"reduces-to-min[{m.name}]",
                expect,
                _checked(_id_domain, lambda xs, m=m: minu.prop_identity_min(m, f, xs)),
            )
        )
        entries.append(
            PropEntry(
                f"reduces-to-argmin[{m.name}]",
                expect,
                _checked(_id_domain, lambda xs, m=m: minu.prop_identity_argmin(m, f, xs)),
            )
        )
    for m in (measures.unwrap, const7):
        entries.append(
            PropEntry(
                f"result-nonempty-subset[{m.name}]",
                EXPECT_PASS,
                _checked(_id_domain, lambda xs, m=m: minu.prop_result_nonempty_subset(m, f, xs)),
            )
        )
        entries.append(
            PropEntry(
                f"argmin-sound[{m.name}]",
                EXPECT_PASS,
                _checked(_id_domain, lambda xs, m=m: minu.prop_argmin_uncertain_sound(m, f, xs)),
            )
        )
        entries.append(
            PropEntry(
                f"argmin-complete[{m.name}]",
                EXPECT_PASS,
                _checked(_id_domain, lambda xs, m=m: minu.prop_argmin_uncertain_complete(m, f, xs)),
            )
        )
    return entries


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

SUITES: Dict[str, List[PropEntry]] = {
    "core": _core_suite(),
    "relations": _relations_suite(),
    "front": _front_suite(),
    "moo": _moo_suite(),
    "uncertain": _uncertain_suite(),
    "generators": _generators_suite(),
    "m1-seq": _mono_suite("seq", "m1"),
    "m2-seq": _mono_suite("seq", "m2"),
    "m1-sp": _mono_suite("sp", "m1"),
    "m2-sp": _mono_suite("sp", "m2"),
    "m1-interval": _mono_suite("interval", "m1"),
    "m2-interval": _mono_suite("interval", "m2"),
    "m1-pdf": _mono_suite("pdf", "m1"),
    "m2-pdf": _mono_suite("pdf", "m2"),
    "m1-id": _mono_suite("id", "m1"),
    "m2-id": _mono_suite("id", "m2"),
    "minu-seq": _minu_suite("seq"),
    "minu-sp": _minu_suite("sp"),
    "minu-interval": _minu_suite("interval"),
    "minu-pdf": _minu_suite("pdf"),
    "minu-id": _identity_suite(),
}


def run_suite(name: str, n: int, seed: int) -> List[SuiteRow]:
    if name not in SUITES:
        raise KeyError(f"unknown suite: {name}")
    rows = []
    for entry in SUITES[name]:
        child = _child_seed(name, entry.name, seed)
        result = entry.run(n, qp.rng_from_seed(child))
        if result.seed is None:
            result = CheckResult(
                outcome=result.outcome,
                cases=result.cases,
                discards=result.discards,
                failed_at=result.failed_at,
                witness=result.witness,
                seed=child,
            )
        rows.append(SuiteRow(name, entry.name, entry.expect, result))
    return rows


def run_suites(names: Sequence[str], n: int, seed: int) -> List[SuiteRow]:
    out: List[SuiteRow] = []
    for name in names:
        out.extend(run_suite(name, n, seed))
    return out
