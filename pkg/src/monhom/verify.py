"""Named verification suites: every structural lemma as an executable check.

Each suite returns CheckResult records with an ASCII anchor naming the
statement under test.  Wall-clock seconds are measured per check but kept
out of the rendered reports so that identical inputs produce identical
bytes; callers that want timings read the field directly.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from .errors import MonhomError
from .exact_linalg import FgAbGroup, IntMatrix, cokernel_group
from .gamma_chain import (
    COHOMOLOGICAL,
    HOMOLOGICAL,
    _term_layout,
    build_complex,
    epsilon_map,
    harrison_dim_q,
    hochschild,
    hochschild_dim_q,
    leech_cohomology,
    push_matrix,
    y_exactness_check,
)
from .grillet import (
    bar_complex_compare,
    d0_cohomology,
    d0_homology,
    grillet_char0,
    kaehler_compare,
)
from .hc_modules import (
    LEFT,
    RIGHT,
    HCModuleMap,
    boxtimes,
    jstar_finite_cyclic,
    omega,
    pullback,
    std_projective,
    tabulate_presented,
    trivial_kc_module,
    trivial_module,
)
from .hodge import eulerian_idempotents, hodge_decomposition
from .monoids import (
    cyclic_group,
    product_monoid,
    semilattice_chain,
    trivial_monoid,
    truncated_add,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    anchor: str
    passed: bool
    detail: str
    seconds: float

    def to_json(self):
        return {"name": self.name, "anchor": self.anchor,
                "passed": self.passed, "detail": self.detail}


def suite_monoids():
    return [
        ("trivial", trivial_monoid()),
        ("cyclic_group(2)", cyclic_group(2)),
        ("cyclic_group(3)", cyclic_group(3)),
        ("semilattice_chain(1)", semilattice_chain(1)),
        ("truncated_add(2)", truncated_add(2)),
        ("cyclic_group(2)xcyclic_group(2)",
         product_monoid(cyclic_group(2), cyclic_group(2)).monoid),
    ]


def _right_family(monoid):
    return [("trivialZ", trivial_module(monoid, RIGHT)),
            (f"projective:right:{monoid.elements[-1]}",
             std_projective(monoid, monoid.elements[-1], RIGHT)),
            ("jstar:Zmod4:trivial", jstar_finite_cyclic(monoid, 4, RIGHT))]


def _left_family(monoid):
    return [("trivialZ", trivial_module(monoid, LEFT)),
            (f"projective:left:{monoid.elements[-1]}",
             std_projective(monoid, monoid.elements[-1], LEFT)),
            ("jstar:Zmod4:trivial", jstar_finite_cyclic(monoid, 4, LEFT))]


def _result(name, anchor, started, passed, detail):
    return CheckResult(name, anchor, passed, detail,
                       round(time.monotonic() - started, 3))


def _guarded(name, anchor, fn):
    """Run one check body; a raised MonhomError is a failed check."""
    started = time.monotonic()
    try:
        detail = fn()
    except MonhomError as exc:
        return _result(name, anchor, started, False,
                       f"{type(exc).__name__}: {exc}")
    return _result(name, anchor, started, True, detail)


def check_complex_soundness():
    anchor = "d o d = 0"
    out = []
    for label, monoid in suite_monoids():
        def body(monoid=monoid):
            built = 0
            for _, coeff in _right_family(monoid):
                build_complex(monoid, coeff, 5, HOMOLOGICAL)
                built += 1
            for _, coeff in _left_family(monoid):
                build_complex(monoid, coeff, 5, COHOMOLOGICAL)
                built += 1
            return f"{built} complexes built through degree 5"
        out.append(_guarded(f"complex-soundness[{label}]", anchor, body))
    return out


def check_degree_bridge():
    anchor = "HH_0(F)=F([0]); HH_1 = coker d_2"
    out = []
    for label, monoid in suite_monoids():
        def body(monoid=monoid):
            pairs = 0
            for _, coeff in _right_family(monoid):
                cx = build_complex(monoid, coeff, 2, HOMOLOGICAL)
                if not cx.boundary(1).is_zero():
                    raise MonhomError("d_1 is not the zero matrix")
                if hochschild(cx, 0) != coeff.value_group(monoid.identity):
                    raise MonhomError("HH_0 differs from the identity value")
                stacked = IntMatrix.hstack(
                    [cx.boundary(2), cx.relation_matrix(1)], rows=cx.dims[1])
                if hochschild(cx, 1) != cokernel_group(stacked):
                    raise MonhomError("HH_1 differs from coker d_2")
                pairs += 1
            return f"{pairs} coefficient systems checked"
        out.append(_guarded(f"degree-bridge[{label}]", anchor, body))
    return out


def check_lemma_nuli():
    anchor = "HH_1(G_*(C,N)) = N (x)_{H(C)} Omega_C"
    out = []
    for label, monoid in suite_monoids():
        def body(monoid=monoid):
            for _, coeff in _right_family(monoid):
                d0_homology(monoid, coeff)
            return "tensor and complex paths agree"
        out.append(_guarded(f"lemma-nuli[{label}]", anchor, body))
    return out


def check_group_oracle():
    anchor = "HH_n(C; Z) = H_n(C; Z) for C = Z/2, Z/3"
    expected = {
        2: [FgAbGroup.free(1), FgAbGroup(0, (2,)), FgAbGroup.trivial(),
            FgAbGroup(0, (2,)), FgAbGroup.trivial()],
        3: [FgAbGroup.free(1), FgAbGroup(0, (3,)), FgAbGroup.trivial(),
            FgAbGroup(0, (3,)), FgAbGroup.trivial()],
    }
    out = []
    for k in (2, 3):
        def body(k=k):
            monoid = cyclic_group(k)
            rep = bar_complex_compare(monoid, trivial_kc_module(monoid), 4)
            if not rep.passed:
                raise MonhomError(f"bar comparison failed: {rep.detail}")
            cx = build_complex(monoid, trivial_module(monoid, RIGHT), 5,
                               HOMOLOGICAL)
            got = [hochschild(cx, n) for n in range(5)]
            if got != expected[k]:
                raise MonhomError(f"homology {got} differs from the"
                                  " classical values")
            return "bar boundaries match; degrees 0..4 as classical"
        out.append(_guarded(f"group-oracle[cyclic_group({k})]", anchor, body))
    return out


def check_leech_der():
    anchor = "HH^0 = M([0]); HH^1(G^*(C,M)) = Der(C,M)"
    out = []
    for label, monoid in suite_monoids():
        def body(monoid=monoid):
            for _, coeff in _left_family(monoid):
                if leech_cohomology(monoid, coeff, 0) != \
                        coeff.value_group(monoid.identity):
                    raise MonhomError("HH^0 differs from the identity value")
                d0_cohomology(monoid, coeff)
            return "cohomology degree 0 and 1 bridges hold"
        out.append(_guarded(f"leech-der[{label}]", anchor, body))
    return out


def check_hodge():
    anchor = "Harr_n(F)=HH_n^{(1)}(F); sum_i dim HH_n^{(i)} = dim HH_n"
    out = []

    def identities():
        for n in range(1, 6):
            bad = eulerian_idempotents(n).identity_violations()
            if bad:
                raise MonhomError(f"degree {n}: {bad}")
        return "idempotent, orthogonality, and sum identities hold, n <= 5"
    out.append(_guarded("hodge[projector-identities]", anchor, identities))

    for label, monoid in suite_monoids():
        def body(monoid=monoid):
            cq = build_complex(monoid, trivial_module(monoid, RIGHT), 5,
                               HOMOLOGICAL, ring="Q")
            dq = build_complex(monoid, trivial_module(monoid, LEFT), 5,
                               COHOMOLOGICAL, ring="Q")
            for cx in (cq, dq):
                for n in range(1, 5):
                    dims = hodge_decomposition(cx, n)
                    if sum(dims) != hochschild_dim_q(cx, n):
                        raise MonhomError(f"weight sum off in degree {n}")
                    if dims[0] != harrison_dim_q(cx, n):
                        raise MonhomError(
                            f"weight-1 piece differs from the shuffle"
                            f" computation in degree {n}")
            return "weights split the totals; weight 1 matches, n <= 4"
        out.append(_guarded(f"hodge[{label}]", anchor, body))
    return out


def check_y_exactness():
    anchor = "0 -> j^*(kZ) -> j^*(Z) -> j^*(Z/k) -> 0 is a Y-exact sequence"
    out = []
    for k in (2, 3):
        def body(k=k):
            monoid = cyclic_group(k)
            source = trivial_module(monoid, RIGHT)
            target = jstar_finite_cyclic(monoid, k, RIGHT)
            hmap = HCModuleMap(source, target,
                               [IntMatrix.identity(1)
                                for _ in monoid.elements])
            checked = 0
            for n in range(1, 5):
                for lam in _partitions(n):
                    report = y_exactness_check(hmap, n, lam)
                    if not report.passed:
                        raise MonhomError(
                            f"failed at degree {n}, partition {lam}:"
                            f" {report.detail}")
                    checked += 1
            return f"{checked} (degree, partition) pairs pass"
        out.append(_guarded(f"y-exactness[cyclic_group({k})]", anchor, body))
    return out


def _partitions(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for p in range(min(n, largest), 0, -1):
        for rest in _partitions(n - p, p):
            out.append((p,) + rest)
    return out


def _product_fixture(c1, c2):
    pm = product_monoid(c1, c2)
    n1 = trivial_module(c1, RIGHT)
    n2 = std_projective(c2, c2.elements[-1], RIGHT)
    return pm, n1, n2


def _face_bijection(pm, big, n1, n2, degree):
    """Index map from the product-monoid term basis to the row-major
    tensor basis of the two factor terms."""
    tuples, prods, offs, _ = _term_layout(pm.monoid, big, degree)
    t1_lay = _term_layout(pm.iota1.source, n1, degree)
    t2_lay = _term_layout(pm.iota2.source, n2, degree)
    idx1 = {t: k for k, t in enumerate(t1_lay[0])}
    idx2 = {t: k for k, t in enumerate(t2_lay[0])}
    d2 = t2_lay[3]
    phi = {}
    for kt, t in enumerate(tuples):
        split = [pm.split(x) for x in t]
        t1 = tuple(a for a, _ in split)
        t2 = tuple(b for _, b in split)
        k1, k2 = idx1[t1], idx2[t2]
        r1 = n1.ranks[t1_lay[1][k1]]
        r2 = n2.ranks[t2_lay[1][k2]]
        for j1 in range(r1):
            for j2 in range(r2):
                phi[offs[kt] + j1 * r2 + j2] = \
                    (t1_lay[2][k1] + j1) * d2 + (t2_lay[2][k2] + j2)
    return phi


def check_products():
    anchor = ("C^{(c1,c2)} = C^{c1} (x) C^{c2}; faces of G_*(C1xC2, N1 (x)"
              " N2) factor; Omega_C = pi_1^* Omega_{C1} (+) pi_2^*"
              " Omega_{C2}")
    out = []

    def projectives():
        pm = product_monoid(cyclic_group(2), cyclic_group(2))
        for side in (LEFT, RIGHT):
            for a1 in pm.iota1.source.elements:
                for a2 in pm.iota2.source.elements:
                    built = boxtimes(std_projective(pm.iota1.source, a1, side),
                                     std_projective(pm.iota2.source, a2, side),
                                     pm)
                    direct = std_projective(pm.monoid, pm.pair(a1, a2), side)
                    if built.ranks != direct.ranks or \
                            built.act != direct.act:
                        raise MonhomError(f"projectives differ at ({a1},{a2})")
        return "all four pairs match on both sides"
    out.append(_guarded("products[projectives]", anchor, projectives))

    for c1, c2, label in [
            (cyclic_group(2), cyclic_group(2), "Z2xZ2"),
            (cyclic_group(2), cyclic_group(3), "Z2xZ3"),
            (semilattice_chain(1), cyclic_group(2), "semilattice-x-Z2")]:
        def faces(c1=c1, c2=c2):
            pm, n1, n2 = _product_fixture(c1, c2)
            big = boxtimes(n1, n2, pm)
            checked = 0
            for m in range(3):
                phi_low = _face_bijection(pm, big, n1, n2, m)
                phi_high = _face_bijection(pm, big, n1, n2, m + 1)
                for i in range(m + 2):
                    eps = epsilon_map(i, m)
                    P = push_matrix(eps, pm.monoid, big)
                    k1 = push_matrix(eps, pm.iota1.source, n1)
                    k2 = push_matrix(eps, pm.iota2.source, n2)
                    for c in range(P.cols):
                        for r in range(P.rows):
                            a, b = divmod(phi_low[r], k2.rows)
                            want = k1.data[a][phi_high[c] // k2.cols] * \
                                k2.data[b][phi_high[c] % k2.cols]
                            if P.data[r][c] != want:
                                raise MonhomError(
                                    f"face {i} at degree {m + 1} differs")
                    checked += 1
            return f"{checked} face matrices factor through the tensor basis"
        out.append(_guarded(f"products[faces:{label}]", anchor, faces))

    for c1, c2, label in [(cyclic_group(2), cyclic_group(2), "Z2xZ2"),
                          (cyclic_group(2), cyclic_group(3), "Z2xZ3")]:
        def omega_split(c1=c1, c2=c2):
            pm = product_monoid(c1, c2)
            big = tabulate_presented(omega(pm.monoid))
            s1 = pullback(pm.pi1, tabulate_presented(omega(c1)))
            s2 = pullback(pm.pi2, tabulate_presented(omega(c2)))
            for x in pm.monoid.elements:
                lhs = big.value_group(x)
                rhs = s1.value_group(x).direct_sum(s2.value_group(x))
                if lhs != rhs:
                    raise MonhomError(
                        f"value at {x}: {lhs} differs from {rhs}")
            return "invariant factors split at every element"
        out.append(_guarded(f"products[omega:{label}]", anchor, omega_split))
    return out


def check_kaehler():
    anchor = "j_*(Omega_C) = Omega^1_{K[C]}"
    out = []
    for label, monoid in suite_monoids():
        def body(monoid=monoid):
            for ring in ("Z", "Q"):
                rep = kaehler_compare(monoid, ring=ring)
                if not rep.passed:
                    raise MonhomError(f"ring {ring}: {rep.detail}")
            return "presentations match over Z and Q"
        out.append(_guarded(f"kaehler[{label}]", anchor, body))
    return out


def check_grillet():
    anchor = "D_0 paths agree; D_*(C,N) = Harr_{*+1}(C,N) over Q"
    out = []
    for label, monoid in suite_monoids():
        def body(monoid=monoid):
            right = trivial_module(monoid, RIGHT)
            left = trivial_module(monoid, LEFT)
            zero_h = d0_homology(monoid, right)
            zero_c = d0_cohomology(monoid, left)
            if grillet_char0(monoid, right, 0, HOMOLOGICAL) != \
                    zero_h.free_rank:
                raise MonhomError("char-0 path differs in degree 0")
            if grillet_char0(monoid, left, 0, COHOMOLOGICAL) != \
                    zero_c.free_rank:
                raise MonhomError("char-0 cochain path differs in degree 0")
            return "degree-0 paths and rationalizations agree"
        out.append(_guarded(f"grillet[{label}]", anchor, body))

    def acyclicity():
        for k in (2, 3):
            monoid = cyclic_group(k)
            for n in range(4):
                if grillet_char0(monoid, trivial_module(monoid, RIGHT), n,
                                 HOMOLOGICAL):
                    raise MonhomError(f"Z/{k} not acyclic in degree {n}")
                if grillet_char0(monoid, trivial_module(monoid, LEFT), n,
                                 COHOMOLOGICAL):
                    raise MonhomError(f"Z/{k} cochain side, degree {n}")
        klein = product_monoid(cyclic_group(2), cyclic_group(2)).monoid
        for n in range(3):
            if grillet_char0(klein, trivial_module(klein, RIGHT), n,
                             HOMOLOGICAL):
                raise MonhomError(f"Klein group not acyclic in degree {n}")
        return "finite groups are rationally acyclic through degree 3"
    out.append(_guarded("grillet[group-acyclicity]",
                        "rational acyclicity of finite groups", acyclicity))
    return out


SUITES = {
    "complex-soundness": check_complex_soundness,
    "degree-bridge": check_degree_bridge,
    "lemma-nuli": check_lemma_nuli,
    "group-oracle": check_group_oracle,
    "leech-der": check_leech_der,
    "hodge": check_hodge,
    "y-exactness": check_y_exactness,
    "products": check_products,
    "kaehler": check_kaehler,
    "grillet": check_grillet,
}


def run_suites(names):
    """Execute the named suites in declaration order; 'all' runs every one."""
    if names == ["all"] or names == "all":
        selected = list(SUITES)
    else:
        selected = list(names)
        if not selected:
            raise MonhomError("no suites selected")
        for name in selected:
            if name not in SUITES:
                raise MonhomError(f"unknown suite {name!r}; choose from "
                                  f"{', '.join(SUITES)} or all")
    results = []
    for name in SUITES:
        if name in selected:
            results.extend(SUITES[name]())
    return results


def render_text(results):
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status} {r.name}: {r.anchor}")
        lines.append(f"     {r.detail}")
    failed = sum(1 for r in results if not r.passed)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"


def render_json(results):
    payload = {"checks": [r.to_json() for r in results],
               "passed": sum(1 for r in results if r.passed),
               "failed": sum(1 for r in results if not r.passed)}
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
