"""Smash products of Hopf quasigroups and smash coproducts of Hopf
coquasigroups, with checkers for the hypotheses under which the built
candidate is itself a valid structure.

Builders never validate their output; feed the candidate to the structure
checkers.  The roundtrip functions package both directions: the candidate's
full suite verdict against the single condition that governs it.
"""

from .actions import (check_coqm_algebra, check_coqm_coalgebra,
                      check_qm_algebra, check_qm_coalgebra,
                      check_quasicomodule, check_quasimodule)
from .errors import DimMismatch, HypothesisNotMet, InvalidInput
from .report import LawAccumulator, VerificationReport
from .structures import (AlgebraData, CoalgebraData, HopfCoquasigroup,
                         HopfQuasigroup, basis_sparse,
                         check_hopf_coquasigroup, check_hopf_quasigroup)
from .tensors import Mat, Ten3, Vec, pair_index, sadd


class SmashInput:
    """A Hopf quasigroup H acting on a Hopf quasigroup A."""

    __slots__ = ("H", "A", "act")

    def __init__(self, H, A, act):
        if act.h_dim != H.dim or act.m_dim != A.dim:
            raise DimMismatch("action dims do not match H and A")
        if H.field != A.field or act.field != H.field:
            raise DimMismatch("field mismatch between H, A and action")
        self.H = H
        self.A = A
        self.act = act

    def validate(self):
        """A must be a quasimodule algebra and coalgebra under the action."""
        rep = VerificationReport()
        rep.extend(check_quasimodule(self.H, self.act))
        rep.extend(check_qm_algebra(self.H, self.A, self.act))
        rep.extend(check_qm_coalgebra(self.H, self.A, self.act))
        return rep


class CosmashInput:
    """A Hopf coquasigroup C coacting over a Hopf coquasigroup H."""

    __slots__ = ("H", "C", "coact")

    def __init__(self, H, C, coact):
        if coact.h_dim != H.dim or coact.m_dim != C.dim:
            raise DimMismatch("coaction dims do not match H and C")
        if H.field != C.field or coact.field != H.field:
            raise DimMismatch("field mismatch between H, C and coaction")
        self.H = H
        self.C = C
        self.coact = coact

    def validate(self):
        rep = VerificationReport()
        rep.extend(check_quasicomodule(self.H, self.coact))
        rep.extend(check_coqm_algebra(self.H, self.C, self.coact))
        rep.extend(check_coqm_coalgebra(self.H, self.C, self.coact))
        return rep


def check_cocommu(inp):
    """h_(1) (x) h_(2).a = h_(2) (x) h_(1).a for all basis h, a."""
    f = inp.H.field
    rep = VerificationReport()
    acc = LawAccumulator(rep, f, "cocommu")
    for h in range(inp.H.dim):
        split = inp.H.delta_sparse(basis_sparse(f, h))
        for a in range(inp.A.dim):
            ea = basis_sparse(f, a)
            lhs, rhs = {}, {}
            for (h1, h2), c in split.items():
                for (x,), v in inp.act.act(basis_sparse(f, h2), ea).items():
                    sadd(f, lhs, (h1, x), f.mul(c, v))
                for (x,), v in inp.act.act(basis_sparse(f, h1), ea).items():
                    sadd(f, rhs, (h2, x), f.mul(c, v))
            acc.check((h, a), lhs, rhs)
    acc.finish()
    return rep


def check_modass(inp):
    """g.(S(h).a) = (gS(h)).a over all triples.

    Also reports, informationally, whether the stronger plain associativity
    g.(h.a) = (gh).a holds (law id modass.strict): the main law is the
    associativity of the action only up to the antipodal twist.
    """
    H, act = inp.H, inp.act
    f = H.field
    rep = VerificationReport()
    acc = LawAccumulator(rep, f, "modass")
    strict = LawAccumulator(rep, f, "modass.strict", informational=True)
    for g in range(H.dim):
        eg = basis_sparse(f, g)
        for h in range(H.dim):
            eh = basis_sparse(f, h)
            sh = H.antipode_sparse(eh)
            gsh = H.mul_sparse(eg, sh)
            gh = H.mul_sparse(eg, eh)
            for a in range(inp.A.dim):
                ea = basis_sparse(f, a)
                acc.check((g, h, a),
                          act.act(eg, act.act(sh, ea)),
                          act.act(gsh, ea))
                strict.check((g, h, a),
                             act.act(eg, act.act(eh, ea)),
                             act.act(gh, ea))
    acc.finish()
    strict.finish()
    return rep


def build_smash_product(inp):
    """The candidate structure on A (x) H.

    Product (a(x)h)(b(x)g) = a(h_(1).b) (x) h_(2)g, tensor-product
    coproduct and counit, antipode S(a(x)h) = S(h_(2)).S(a) (x) S(h_(1)).
    No axioms are checked here.
    """
    val = inp.validate()
    if not val.ok:
        raise InvalidInput(
            "not a quasimodule Hopf quasigroup: "
            + ", ".join(l.law_id for l in val.failing()))
    H, A, act = inp.H, inp.A, inp.act
    f = H.field
    nA, nH = A.dim, H.dim
    n = nA * nH

    mu_entries = []
    for a in range(nA):
        for h in range(nH):
            i = pair_index(a, h, nH)
            eh_split = H.delta_sparse(basis_sparse(f, h))
            for b in range(nA):
                eb = basis_sparse(f, b)
                for g in range(nH):
                    j = pair_index(b, g, nH)
                    for (h1, h2), c in eh_split.items():
                        hb = act.act(basis_sparse(f, h1), eb)
                        left = A.mul_sparse(basis_sparse(f, a), hb)
                        right = H.mul_sparse(basis_sparse(f, h2),
                                             basis_sparse(f, g))
                        for (x,), u in left.items():
                            for (y,), v in right.items():
                                mu_entries.append(
                                    (i, j, pair_index(x, y, nH),
                                     f.mul(c, f.mul(u, v))))
    unit = [f.zero] * n
    for a, ca in A.unit.nonzero():
        for h, ch in H.unit.nonzero():
            unit[pair_index(a, h, nH)] = f.mul(ca, ch)

    delta_entries = []
    counit = [f.zero] * n
    for a in range(nA):
        a_split = A.delta_sparse(basis_sparse(f, a))
        for h in range(nH):
            i = pair_index(a, h, nH)
            counit[i] = f.mul(A.counit[a], H.counit[h])
            for (a1, a2), ca in a_split.items():
                for (h1, h2), ch in H.delta_sparse(
                        basis_sparse(f, h)).items():
                    delta_entries.append(
                        (i, pair_index(a1, h1, nH), pair_index(a2, h2, nH),
                         f.mul(ca, ch)))

    srows = [[f.zero] * n for _ in range(n)]
    for a in range(nA):
        sa = A.antipode_sparse(basis_sparse(f, a))
        for h in range(nH):
            j = pair_index(a, h, nH)
            for (h1, h2), c in H.delta_sparse(basis_sparse(f, h)).items():
                s2 = H.antipode_sparse(basis_sparse(f, h2))
                acted = act.act(s2, sa)
                s1 = H.antipode_sparse(basis_sparse(f, h1))
                for (x,), u in acted.items():
                    for (y,), v in s1.items():
                        k = pair_index(x, y, nH)
                        srows[k][j] = f.add(srows[k][j],
                                            f.mul(c, f.mul(u, v)))

    return HopfQuasigroup(
        AlgebraData(Ten3.from_entries(f, n, mu_entries), Vec(f, unit)),
        CoalgebraData(Ten3.from_entries(f, n, delta_entries),
                      Vec(f, counit)),
        Mat(f, srows))


def check_commu(inp):
    """c^(0) (x) c^(1)h = c^(0) (x) hc^(1) for all basis c, h."""
    H = inp.H
    f = H.field
    rep = VerificationReport()
    acc = LawAccumulator(rep, f, "commu")
    for c in range(inp.C.dim):
        co = inp.coact.coact(basis_sparse(f, c))
        for h in range(H.dim):
            eh = basis_sparse(f, h)
            lhs, rhs = {}, {}
            for (c0, c1), v in co.items():
                e1 = basis_sparse(f, c1)
                for (x,), u in H.mul_sparse(e1, eh).items():
                    sadd(f, lhs, (c0, x), f.mul(v, u))
                for (x,), u in H.mul_sparse(eh, e1).items():
                    sadd(f, rhs, (c0, x), f.mul(v, u))
            acc.check((c, h), lhs, rhs)
    acc.finish()
    return rep


def check_comodcoass(inp):
    """c^(0)(0) (x) S(c^(0)(1)) (x) c^(1) = c^(0) (x) S(c^(1)_(1)) (x) c^(1)_(2)."""
    H = inp.H
    f = H.field
    rep = VerificationReport()
    acc = LawAccumulator(rep, f, "comodcoass")
    for c in range(inp.C.dim):
        co = inp.coact.coact(basis_sparse(f, c))
        lhs, rhs = {}, {}
        for (c0, c1), v in co.items():
            for (c00, c01), w in inp.coact.coact(basis_sparse(f, c0)).items():
                for (x,), u in H.antipode_sparse(
                        basis_sparse(f, c01)).items():
                    sadd(f, lhs, (c00, x, c1), f.mul(v, f.mul(w, u)))
            for (h1, h2), w in H.delta_sparse(basis_sparse(f, c1)).items():
                for (x,), u in H.antipode_sparse(basis_sparse(f, h1)).items():
                    sadd(f, rhs, (c0, x, h2), f.mul(v, f.mul(w, u)))
        acc.check((c,), lhs, rhs)
    acc.finish()
    return rep


def build_smash_coproduct(inp):
    """The candidate structure on H (x) C.

    Tensor-product algebra and counit; coproduct
    Delta(h(x)c) = h_(1) (x) c_(1)^(0) (x) h_(2)c_(1)^(1) (x) c_(2) and
    antipode S(h(x)c) = S(hc^(1)) (x) S(c^(0)).  No axioms checked here.
    """
    val = inp.validate()
    if not val.ok:
        raise InvalidInput(
            "not a quasicomodule Hopf coquasigroup: "
            + ", ".join(l.law_id for l in val.failing()))
    H, C, coact = inp.H, inp.C, inp.coact
    f = H.field
    nH, nC = H.dim, C.dim
    n = nH * nC

    mu_entries = []
    for h in range(nH):
        for g in range(nH):
            hg = H.mul_sparse(basis_sparse(f, h), basis_sparse(f, g))
            for c in range(nC):
                for d in range(nC):
                    cd = C.mul_sparse(basis_sparse(f, c), basis_sparse(f, d))
                    for (x,), u in hg.items():
                        for (y,), v in cd.items():
                            mu_entries.append(
                                (pair_index(h, c, nC), pair_index(g, d, nC),
                                 pair_index(x, y, nC), f.mul(u, v)))
    unit = [f.zero] * n
    for h, ch in H.unit.nonzero():
        for c, cc in C.unit.nonzero():
            unit[pair_index(h, c, nC)] = f.mul(ch, cc)

    delta_entries = []
    counit = [f.zero] * n
    for h in range(nH):
        h_split = H.delta_sparse(basis_sparse(f, h))
        for c in range(nC):
            i = pair_index(h, c, nC)
            counit[i] = f.mul(H.counit[h], C.counit[c])
            for (c1, c2), vc in C.delta_sparse(basis_sparse(f, c)).items():
                for (c10, c11), w in coact.coact(
                        basis_sparse(f, c1)).items():
                    for (h1, h2), vh in h_split.items():
                        for (y,), u in H.mul_sparse(
                                basis_sparse(f, h2),
                                basis_sparse(f, c11)).items():
                            delta_entries.append(
                                (i, pair_index(h1, c10, nC),
                                 pair_index(y, c2, nC),
                                 f.mul(vc, f.mul(w, f.mul(vh, u)))))

    srows = [[f.zero] * n for _ in range(n)]
    for h in range(nH):
        eh = basis_sparse(f, h)
        for c in range(nC):
            j = pair_index(h, c, nC)
            for (c0, c1), v in coact.coact(basis_sparse(f, c)).items():
                hc1 = H.mul_sparse(eh, basis_sparse(f, c1))
                shc1 = H.antipode_sparse(hc1)
                sc0 = C.antipode_sparse(basis_sparse(f, c0))
                for (x,), u in shc1.items():
                    for (y,), w in sc0.items():
                        k = pair_index(x, y, nC)
                        srows[k][j] = f.add(srows[k][j],
                                            f.mul(v, f.mul(u, w)))

    return HopfCoquasigroup(
        AlgebraData(Ten3.from_entries(f, n, mu_entries), Vec(f, unit)),
        CoalgebraData(Ten3.from_entries(f, n, delta_entries),
                      Vec(f, counit)),
        Mat(f, srows))


class RoundtripReport:
    """Both directions of a smash-construction theorem instance.

    `candidate_ok` is the full-suite verdict on the built structure,
    `condition_ok` the verdict of the governing condition; the theorem says
    they always agree when the standing hypotheses hold.
    """

    __slots__ = ("candidate_ok", "condition_ok", "candidate_report",
                 "condition_report", "hypothesis_report")

    def __init__(self, candidate_report, condition_report,
                 hypothesis_report):
        self.candidate_report = candidate_report
        self.condition_report = condition_report
        self.hypothesis_report = hypothesis_report
        self.candidate_ok = candidate_report.ok
        self.condition_ok = condition_report.ok

    @property
    def equivalent(self):
        return self.candidate_ok == self.condition_ok

    def to_dict(self):
        return {
            "equivalent": self.equivalent,
            "candidate_ok": self.candidate_ok,
            "condition_ok": self.condition_ok,
            "candidate": self.candidate_report.to_dict(),
            "condition": self.condition_report.to_dict(),
            "hypotheses": self.hypothesis_report.to_dict(),
        }


def theorem_smash_roundtrip(inp):
    """Candidate-valid <=> action antipodally associative, given cocommu.

    Raises HypothesisNotMet when the standing hypotheses (quasimodule Hopf
    quasigroup invariants plus cocommu) fail; the equivalence is not
    claimed outside them.
    """
    hyp = VerificationReport()
    hyp.extend(inp.validate())
    hyp.extend(check_cocommu(inp))
    if not hyp.ok:
        raise HypothesisNotMet(
            "standing hypotheses fail: "
            + ", ".join(l.law_id for l in hyp.failing()))
    candidate = build_smash_product(inp)
    return RoundtripReport(check_hopf_quasigroup(candidate),
                           check_modass(inp), hyp)


def theorem_cosmash_roundtrip(inp):
    """Candidate-valid <=> twisted comodule coassociativity, given commu."""
    hyp = VerificationReport()
    hyp.extend(inp.validate())
    hyp.extend(check_commu(inp))
    if not hyp.ok:
        raise HypothesisNotMet(
            "standing hypotheses fail: "
            + ", ".join(l.law_id for l in hyp.failing()))
    candidate = build_smash_coproduct(inp)
    return RoundtripReport(check_hopf_coquasigroup(candidate),
                           check_comodcoass(inp), hyp)
