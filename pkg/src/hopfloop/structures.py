"""Hopf quasigroups and coquasigroups as structure-constant tensors.

A structure bundles the product tensor mu, coproduct tensor delta, unit and
counit vectors and the antipode matrix over one exact field.  All law
checkers below quantify over every basis tuple and compare both sides
exactly, recording a witness on the first mismatch per law.
"""

from .errors import DimMismatch
from .fields import check_same_field
from .report import LawAccumulator, VerificationReport
from .tensors import Ten3, Vec, sadd, sscale


class AlgebraData:
    """Unital, not necessarily associative algebra: product tensor + unit."""

    def __init__(self, mu, unit):
        if mu.dim != unit.dim:
            raise DimMismatch("mu/unit dims differ")
        check_same_field(mu.field, unit.field)
        self.mu = mu
        self.unit = unit

    @property
    def dim(self):
        return self.mu.dim

    @property
    def field(self):
        return self.mu.field


class CoalgebraData:
    """Counital, not necessarily coassociative coalgebra.

    The counit is stored as a vector of its values on basis elements.
    """

    def __init__(self, delta, counit):
        if delta.dim != counit.dim:
            raise DimMismatch("delta/counit dims differ")
        check_same_field(delta.field, counit.field)
        self.delta = delta
        self.counit = counit

    @property
    def dim(self):
        return self.delta.dim

    @property
    def field(self):
        return self.delta.field


def mul_sparse_tensor(f, mu, u, v):
    """Product of two 1-leg sparse elements through a multiplication tensor."""
    out = {}
    for (i,), a in u.items():
        for (j,), b in v.items():
            ab = f.mul(a, b)
            for k, c in mu.mul_pairs(i, j):
                sadd(f, out, (k,), f.mul(ab, c))
    return out


def split_sparse_tensor(f, delta, u):
    """Coproduct of a 1-leg sparse element as a 2-leg sparse element."""
    out = {}
    for (i,), a in u.items():
        for (j, k), c in delta.split_pairs(i):
            sadd(f, out, (j, k), f.mul(a, c))
    return out


class HopfStructure:
    """Shared data layout of Hopf quasigroups and coquasigroups."""

    def __init__(self, alg, coalg, antipode):
        if alg.dim != coalg.dim:
            raise DimMismatch("algebra/coalgebra dims differ")
        if antipode.nrows != alg.dim or antipode.ncols != alg.dim:
            raise DimMismatch("antipode matrix dims")
        check_same_field(alg.field, coalg.field)
        check_same_field(alg.field, antipode.field)
        self.alg = alg
        self.coalg = coalg
        self.antipode = antipode

    @property
    def dim(self):
        return self.alg.dim

    @property
    def field(self):
        return self.alg.field

    @property
    def mu(self):
        return self.alg.mu

    @property
    def unit(self):
        return self.alg.unit

    @property
    def delta(self):
        return self.coalg.delta

    @property
    def counit(self):
        return self.coalg.counit

    def same_tensors(self, other):
        return (self.mu == other.mu and self.delta == other.delta
                and self.unit == other.unit and self.counit == other.counit
                and self.antipode == other.antipode)

    # -- sparse element operations (dict keyed by 1-tuples of basis index) --

    def unit_sparse(self):
        return {(i,): c for i, c in self.unit.nonzero()}

    def mul_sparse(self, u, v):
        return mul_sparse_tensor(self.field, self.mu, u, v)

    def delta_sparse(self, u):
        return split_sparse_tensor(self.field, self.delta, u)

    def antipode_sparse(self, u):
        f = self.field
        out = {}
        for (j,), a in u.items():
            for i, c in self.antipode.column(j):
                sadd(f, out, (i,), f.mul(a, c))
        return out

    def counit_scalar(self, u):
        f = self.field
        s = f.zero
        for (i,), a in u.items():
            s = f.add(s, f.mul(a, self.counit[i]))
        return s


class HopfQuasigroup(HopfStructure):
    """Coassociative coalgebra, possibly nonassociative algebra."""


class HopfCoquasigroup(HopfStructure):
    """Associative algebra, possibly non-coassociative coalgebra."""


def basis_sparse(field, i):
    return {(i,): field.one}


def tensor2(field, u, v):
    """Tensor product of two 1-leg sparse elements as a 2-leg element."""
    out = {}
    for (i,), a in u.items():
        for (j,), b in v.items():
            sadd(field, out, (i, j), field.mul(a, b))
    return out


# --- checkers ---------------------------------------------------------------


def check_unital_counital(H):
    """Unit and counit laws over every basis vector."""
    f = H.field
    rep = VerificationReport()
    one = H.unit_sparse()
    ul = LawAccumulator(rep, f, "unit.left")
    ur = LawAccumulator(rep, f, "unit.right")
    for i in range(H.dim):
        e = basis_sparse(f, i)
        ul.check((i,), H.mul_sparse(one, e), e)
        ur.check((i,), H.mul_sparse(e, one), e)
    ul.finish()
    ur.finish()
    cl = LawAccumulator(rep, f, "counit.left")
    cr = LawAccumulator(rep, f, "counit.right")
    for i in range(H.dim):
        e = basis_sparse(f, i)
        left, right = {}, {}
        for (j, k), c in H.delta_sparse(e).items():
            sadd(f, left, (k,), f.mul(c, H.counit[j]))
            sadd(f, right, (j,), f.mul(c, H.counit[k]))
        cl.check((i,), left, e)
        cr.check((i,), right, e)
    cl.finish()
    cr.finish()
    return rep


def check_associativity(H, informational=False):
    """(xy)z = x(yz) over all basis triples, with a witness triple."""
    f = H.field
    rep = VerificationReport()
    acc = LawAccumulator(rep, f, "assoc", informational)
    for i in range(H.dim):
        ei = basis_sparse(f, i)
        for j in range(H.dim):
            ej = basis_sparse(f, j)
            ij = H.mul_sparse(ei, ej)
            for k in range(H.dim):
                ek = basis_sparse(f, k)
                acc.check((i, j, k),
                          H.mul_sparse(ij, ek),
                          H.mul_sparse(ei, H.mul_sparse(ej, ek)))
    acc.finish()
    return rep


def check_coassociativity(H, informational=False):
    """(delta (x) id) delta = (id (x) delta) delta over all basis vectors."""
    f = H.field
    rep = VerificationReport()
    acc = LawAccumulator(rep, f, "coassoc", informational)
    for i in range(H.dim):
        e = basis_sparse(f, i)
        d = H.delta_sparse(e)
        left, right = {}, {}
        for (j, k), c in d.items():
            for (a, b), c2 in H.delta_sparse(basis_sparse(f, j)).items():
                sadd(f, left, (a, b, k), f.mul(c, c2))
            for (a, b), c2 in H.delta_sparse(basis_sparse(f, k)).items():
                sadd(f, right, (j, a, b), f.mul(c, c2))
        acc.check((i,), left, right)
    acc.finish()
    return rep


def _tensor_square_mul(H, u2, v2):
    """Product on H (x) H: (a(x)b)(c(x)d) = ac (x) bd, on 2-leg elements."""
    f = H.field
    out = {}
    for (a, b), ca in u2.items():
        for (c, d), cb in v2.items():
            coeff = f.mul(ca, cb)
            for (x,), cx in H.mul_sparse(basis_sparse(f, a),
                                         basis_sparse(f, c)).items():
                for (y,), cy in H.mul_sparse(basis_sparse(f, b),
                                             basis_sparse(f, d)).items():
                    sadd(f, out, (x, y), f.mul(coeff, f.mul(cx, cy)))
    return out


def check_bialgebra_compat(H):
    """Delta and epsilon are algebra homomorphisms."""
    f = H.field
    rep = VerificationReport()
    dm = LawAccumulator(rep, f, "bialg.delta_mult")
    cm = LawAccumulator(rep, f, "bialg.counit_mult")
    for i in range(H.dim):
        ei = basis_sparse(f, i)
        di = H.delta_sparse(ei)
        for j in range(H.dim):
            ej = basis_sparse(f, j)
            prod = H.mul_sparse(ei, ej)
            dm.check((i, j), H.delta_sparse(prod),
                     _tensor_square_mul(H, di, H.delta_sparse(ej)))
            lhs = H.counit_scalar(prod)
            rhs = f.mul(H.counit[i], H.counit[j])
            cm.check((i, j), {(): lhs} if lhs != f.zero else {},
                     {(): rhs} if rhs != f.zero else {})
    dm.finish()
    cm.finish()
    one = H.unit_sparse()
    du = LawAccumulator(rep, f, "bialg.delta_unit")
    du.check((), H.delta_sparse(one), tensor2(f, one, one))
    du.finish()
    cu = LawAccumulator(rep, f, "bialg.counit_unit")
    s = H.counit_scalar(one)
    cu.check((), {(): s} if s != f.zero else {}, {(): f.one})
    cu.finish()
    return rep


def check_quasi_identities(H):
    """The four composite cancellation identities of a Hopf quasigroup.

    Coassociativity is a prerequisite and is reported first.
    """
    f = H.field
    rep = VerificationReport()
    rep.extend(check_coassociativity(H))
    accs = {name: LawAccumulator(rep, f, name) for name in
            ("quasi1.left", "quasi1.right", "quasi2.left", "quasi2.right")}
    for h in range(H.dim):
        eh = basis_sparse(f, h)
        dh = H.delta_sparse(eh)
        eps_h = H.counit[h]
        for g in range(H.dim):
            eg = basis_sparse(f, g)
            expected = sscale(f, eg, eps_h)
            q1l, q1r, q2l, q2r = {}, {}, {}, {}
            for (h1, h2), c in dh.items():
                e1 = basis_sparse(f, h1)
                e2 = basis_sparse(f, h2)
                s1 = H.antipode_sparse(e1)
                s2 = H.antipode_sparse(e2)
                # S(h1)(h2 g)
                t = H.mul_sparse(s1, H.mul_sparse(e2, eg))
                for k, v in t.items():
                    sadd(f, q1l, k, f.mul(c, v))
                # h1 (S(h2) g)
                t = H.mul_sparse(e1, H.mul_sparse(s2, eg))
                for k, v in t.items():
                    sadd(f, q1r, k, f.mul(c, v))
                # (g h1) S(h2)
                t = H.mul_sparse(H.mul_sparse(eg, e1), s2)
                for k, v in t.items():
                    sadd(f, q2l, k, f.mul(c, v))
                # (g S(h1)) h2
                t = H.mul_sparse(H.mul_sparse(eg, s1), e2)
                for k, v in t.items():
                    sadd(f, q2r, k, f.mul(c, v))
            accs["quasi1.left"].check((h, g), q1l, expected)
            accs["quasi1.right"].check((h, g), q1r, expected)
            accs["quasi2.left"].check((h, g), q2l, expected)
            accs["quasi2.right"].check((h, g), q2r, expected)
    for acc in accs.values():
        acc.finish()
    return rep


def check_coq_identities(H):
    """The four composite identities of a Hopf coquasigroup.

    Associativity of the product is a prerequisite and is reported first.
    """
    f = H.field
    rep = VerificationReport()
    rep.extend(check_associativity(H))
    accs = {name: LawAccumulator(rep, f, name) for name in
            ("coq1.left", "coq1.right", "coq2.left", "coq2.right")}
    one = H.unit_sparse()
    for h in range(H.dim):
        eh = basis_sparse(f, h)
        dh = H.delta_sparse(eh)
        one_h = tensor2(f, one, eh)
        h_one = tensor2(f, eh, one)
        c1l, c1r, c2l, c2r = {}, {}, {}, {}
        for (h1, h2), c in dh.items():
            e1 = basis_sparse(f, h1)
            e2 = basis_sparse(f, h2)
            s1 = H.antipode_sparse(e1)
            # S(h1) h2(1) (x) h2(2)  and  h1 S(h2(1)) (x) h2(2)
            for (a, b), c2 in H.delta_sparse(e2).items():
                ea = basis_sparse(f, a)
                sa = H.antipode_sparse(ea)
                cc = f.mul(c, c2)
                for (x,), v in H.mul_sparse(s1, ea).items():
                    sadd(f, c1l, (x, b), f.mul(cc, v))
                for (x,), v in H.mul_sparse(e1, sa).items():
                    sadd(f, c1r, (x, b), f.mul(cc, v))
            # h1(1) (x) h1(2) S(h2)  and  h1(1) (x) S(h1(2)) h2
            s2 = H.antipode_sparse(e2)
            for (a, b), c2 in H.delta_sparse(e1).items():
                eb = basis_sparse(f, b)
                sb = H.antipode_sparse(eb)
                cc = f.mul(c, c2)
                for (x,), v in H.mul_sparse(eb, s2).items():
                    sadd(f, c2l, (a, x), f.mul(cc, v))
                for (x,), v in H.mul_sparse(sb, e2).items():
                    sadd(f, c2r, (a, x), f.mul(cc, v))
        accs["coq1.left"].check((h,), c1l, one_h)
        accs["coq1.right"].check((h,), c1r, one_h)
        accs["coq2.left"].check((h,), c2l, h_one)
        accs["coq2.right"].check((h,), c2r, h_one)
    for acc in accs.values():
        acc.finish()
    return rep


def check_antipode_basic(H):
    """Convolution identities plus anti(co)multiplicativity of the antipode."""
    f = H.field
    rep = VerificationReport()
    one = H.unit_sparse()
    cv_l = LawAccumulator(rep, f, "antipode.conv_left")
    cv_r = LawAccumulator(rep, f, "antipode.conv_right")
    anti_co = LawAccumulator(rep, f, "antipode.anticomult")
    for h in range(H.dim):
        eh = basis_sparse(f, h)
        dh = H.delta_sparse(eh)
        expected = sscale(f, one, H.counit[h])
        left, right = {}, {}
        for (h1, h2), c in dh.items():
            e1 = basis_sparse(f, h1)
            e2 = basis_sparse(f, h2)
            for k, v in H.mul_sparse(H.antipode_sparse(e1), e2).items():
                sadd(f, left, k, f.mul(c, v))
            for k, v in H.mul_sparse(e1, H.antipode_sparse(e2)).items():
                sadd(f, right, k, f.mul(c, v))
        cv_l.check((h,), left, expected)
        cv_r.check((h,), right, expected)
        # (S (x) S)(delta h) = flip(delta(S h))
        lhs = {}
        for (h1, h2), c in dh.items():
            for (a,), c1 in H.antipode_sparse(basis_sparse(f, h1)).items():
                for (b,), c2 in H.antipode_sparse(basis_sparse(f, h2)).items():
                    sadd(f, lhs, (a, b), f.mul(c, f.mul(c1, c2)))
        rhs = {}
        for (a, b), c in H.delta_sparse(H.antipode_sparse(eh)).items():
            sadd(f, rhs, (b, a), c)
        anti_co.check((h,), lhs, rhs)
    cv_l.finish()
    cv_r.finish()
    anti_mul = LawAccumulator(rep, f, "antipode.antimult")
    for i in range(H.dim):
        ei = basis_sparse(f, i)
        si = H.antipode_sparse(ei)
        for j in range(H.dim):
            ej = basis_sparse(f, j)
            anti_mul.check(
                (i, j),
                H.antipode_sparse(H.mul_sparse(ei, ej)),
                H.mul_sparse(H.antipode_sparse(ej), si))
    anti_mul.finish()
    anti_co.finish()
    return rep


def check_hopf_quasigroup(H):
    """Full Hopf quasigroup suite; associativity reported as informational."""
    rep = VerificationReport()
    rep.extend(check_unital_counital(H))
    rep.extend(check_bialgebra_compat(H))
    rep.extend(check_quasi_identities(H))
    rep.extend(check_antipode_basic(H))
    rep.extend(check_associativity(H, informational=True))
    return rep


def check_hopf_coquasigroup(H):
    """Full Hopf coquasigroup suite; coassociativity is informational."""
    rep = VerificationReport()
    rep.extend(check_unital_counital(H))
    rep.extend(check_bialgebra_compat(H))
    rep.extend(check_coq_identities(H))
    rep.extend(check_antipode_basic(H))
    rep.extend(check_coassociativity(H, informational=True))
    return rep


def dualize(H):
    """Structure on the dual basis; an involution on the stored tensors.

    new_mu[i][j][k] = delta[k][i][j], new_delta[i][j][k] = mu[j][k][i],
    unit and counit swap roles, the antipode transposes.
    """
    f = H.field
    n = H.dim
    mu = Ten3(f, tuple(
        tuple(tuple(H.delta[k][i][j] for k in range(n)) for j in range(n))
        for i in range(n)))
    delta = Ten3(f, tuple(
        tuple(tuple(H.mu[j][k][i] for k in range(n)) for j in range(n))
        for i in range(n)))
    alg = AlgebraData(mu, Vec(f, H.counit.data))
    coalg = CoalgebraData(delta, Vec(f, H.unit.data))
    anti = H.antipode.transpose()
    cls = HopfCoquasigroup if isinstance(H, HopfQuasigroup) else HopfQuasigroup
    return cls(alg, coalg, anti)
