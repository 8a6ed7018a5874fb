"""Actions and coactions as standalone tensors, with the module-layer checks.

An ActionData stores h . e_m = sum_{m'} rho[h][m][m'] e_{m'}; a CoactionData
stores rho(e_m) = sum_{m',h} rho[m][m'][h] e_{m'} (x) e_h.  Both reference
dimensions only, so the same tensor can be checked against different
candidate Hopf structures.
"""

from .errors import DimMismatch
from .fields import check_same_field
from .report import LawAccumulator, VerificationReport
from .structures import (basis_sparse, mul_sparse_tensor,
                         split_sparse_tensor)
from .tensors import sadd, sscale


class ActionData:
    __slots__ = ("field", "h_dim", "m_dim", "data", "_view")

    def __init__(self, field, data):
        data = tuple(tuple(tuple(r) for r in plane) for plane in data)
        self.field = field
        self.h_dim = len(data)
        self.m_dim = len(data[0]) if data else 0
        for plane in data:
            if len(plane) != self.m_dim or any(
                    len(r) != self.m_dim for r in plane):
                raise DimMismatch("action tensor is not H_dim x M_dim x M_dim")
        self.data = data
        self._view = None

    def __eq__(self, other):
        return (isinstance(other, ActionData) and self.field == other.field
                and self.data == other.data)

    def __repr__(self):
        return f"ActionData(H_dim={self.h_dim}, M_dim={self.m_dim})"

    @classmethod
    def from_entries(cls, field, h_dim, m_dim, entries):
        data = [[[field.zero] * m_dim for _ in range(m_dim)]
                for _ in range(h_dim)]
        for h, m, m2, c in entries:
            data[h][m][m2] = c
        return cls(field, data)

    @classmethod
    def trivial(cls, H, m_dim):
        """h . m = counit(h) m."""
        f = H.field
        return cls.from_entries(
            f, H.dim, m_dim,
            ((h, m, m, H.counit[h]) for h in range(H.dim)
             for m in range(m_dim)))

    @classmethod
    def from_mu(cls, H):
        """H acting on itself by its own multiplication."""
        f = H.field
        n = H.dim
        entries = []
        for h in range(n):
            for m in range(n):
                for k, c in H.mu.mul_pairs(h, m):
                    entries.append((h, m, k, c))
        return cls.from_entries(f, n, n, entries)

    def _pairs(self, h, m):
        if self._view is None:
            z = self.field.zero
            view = {}
            for h2 in range(self.h_dim):
                for m2 in range(self.m_dim):
                    nz = [(k, c)
                          for k, c in enumerate(self.data[h2][m2]) if c != z]
                    if nz:
                        view[(h2, m2)] = nz
            self._view = view
        return self._view.get((h, m), ())

    def act(self, hu, mu):
        """Apply the linearized action to sparse elements of H and M."""
        f = self.field
        out = {}
        for (h,), a in hu.items():
            for (m,), b in mu.items():
                ab = f.mul(a, b)
                for k, c in self._pairs(h, m):
                    sadd(f, out, (k,), f.mul(ab, c))
        return out


class CoactionData:
    __slots__ = ("field", "m_dim", "h_dim", "data", "_view")

    def __init__(self, field, data):
        data = tuple(tuple(tuple(r) for r in plane) for plane in data)
        self.field = field
        self.m_dim = len(data)
        self.h_dim = len(data[0][0]) if data else 0
        for plane in data:
            if len(plane) != self.m_dim or any(
                    len(r) != self.h_dim for r in plane):
                raise DimMismatch("coaction tensor is not M_dim x M_dim x H_dim")
        self.data = data
        self._view = None

    def __eq__(self, other):
        return (isinstance(other, CoactionData) and self.field == other.field
                and self.data == other.data)

    def __repr__(self):
        return f"CoactionData(M_dim={self.m_dim}, H_dim={self.h_dim})"

    @classmethod
    def from_entries(cls, field, m_dim, h_dim, entries):
        data = [[[field.zero] * h_dim for _ in range(m_dim)]
                for _ in range(m_dim)]
        for m, m2, h, c in entries:
            data[m][m2][h] = c
        return cls(field, data)

    @classmethod
    def trivial(cls, H, m_dim):
        """m -> m (x) 1."""
        f = H.field
        entries = []
        for m in range(m_dim):
            for h, c in H.unit.nonzero():
                entries.append((m, m, h, c))
        return cls.from_entries(f, m_dim, H.dim, entries)

    @classmethod
    def from_delta(cls, H):
        """H coacting on itself by its own comultiplication."""
        entries = []
        for i in range(H.dim):
            for (j, k), c in H.delta.split_pairs(i):
                entries.append((i, j, k, c))
        return cls.from_entries(H.field, H.dim, H.dim, entries)

    @classmethod
    def graded(cls, H, grading):
        """Grouplike grading e_m -> e_m (x) e_{grading[m]}."""
        f = H.field
        return cls.from_entries(
            f, len(grading), H.dim,
            ((m, m, g, f.one) for m, g in enumerate(grading)))

    @classmethod
    def dual_of_action(cls, act):
        """The coaction over the dual structure induced by an action.

        The carrier stays the same: rho(m) = sum_i (h_i . m) (x) h^i over
        dual bases, i.e. coact[m][m'][h] = act[h][m][m'].  Pair the result
        with the dualized Hopf structure; (quasi)module laws for the action
        become the corresponding (quasi)comodule laws for this coaction.
        """
        f = act.field
        entries = []
        for h in range(act.h_dim):
            for m in range(act.m_dim):
                for m2, c in act._pairs(h, m):
                    entries.append((m, m2, h, c))
        return cls.from_entries(f, act.m_dim, act.h_dim, entries)

    def _pairs(self, m):
        if self._view is None:
            z = self.field.zero
            view = []
            for m2 in range(self.m_dim):
                nz = []
                for mp, row in enumerate(self.data[m2]):
                    for h, c in enumerate(row):
                        if c != z:
                            nz.append(((mp, h), c))
                view.append(tuple(nz))
            self._view = view
        return self._view[m]

    def coact(self, mu):
        """Apply to a sparse element of M; result keyed (m', h)."""
        f = self.field
        out = {}
        for (m,), a in mu.items():
            for (mh, c) in self._pairs(m):
                sadd(f, out, mh, f.mul(a, c))
        return out


def _require_action_dims(H, act):
    check_same_field(H.field, act.field)
    if act.h_dim != H.dim:
        raise DimMismatch(f"action H_dim {act.h_dim} != structure dim {H.dim}")


def _require_coaction_dims(H, coact):
    check_same_field(H.field, coact.field)
    if coact.h_dim != H.dim:
        raise DimMismatch(f"coaction H_dim {coact.h_dim} != structure dim {H.dim}")


def check_quasimodule(H, act):
    """Unitality plus the two antipode-cancellation laws of the action."""
    _require_action_dims(H, act)
    f = H.field
    rep = VerificationReport()
    one = H.unit_sparse()
    unital = LawAccumulator(rep, f, "qm.unital")
    for m in range(act.m_dim):
        em = basis_sparse(f, m)
        unital.check((m,), act.act(one, em), em)
    unital.finish()
    left = LawAccumulator(rep, f, "qm2.left")
    right = LawAccumulator(rep, f, "qm2.right")
    for h in range(H.dim):
        dh = H.delta_sparse(basis_sparse(f, h))
        eps = H.counit[h]
        for m in range(act.m_dim):
            em = basis_sparse(f, m)
            expected = sscale(f, em, eps)
            lhs, rhs = {}, {}
            for (h1, h2), c in dh.items():
                e1 = basis_sparse(f, h1)
                e2 = basis_sparse(f, h2)
                s1 = H.antipode_sparse(e1)
                s2 = H.antipode_sparse(e2)
                for k, v in act.act(e1, act.act(s2, em)).items():
                    sadd(f, lhs, k, f.mul(c, v))
                for k, v in act.act(s1, act.act(e2, em)).items():
                    sadd(f, rhs, k, f.mul(c, v))
            left.check((h, m), lhs, expected)
            right.check((h, m), rhs, expected)
    left.finish()
    right.finish()
    return rep


def check_module(H, act):
    """Strict unital associative module laws (the coquasigroup-side input)."""
    _require_action_dims(H, act)
    f = H.field
    rep = VerificationReport()
    one = H.unit_sparse()
    unital = LawAccumulator(rep, f, "mod.unital")
    for m in range(act.m_dim):
        em = basis_sparse(f, m)
        unital.check((m,), act.act(one, em), em)
    unital.finish()
    assoc = LawAccumulator(rep, f, "mod.assoc")
    for h in range(H.dim):
        eh = basis_sparse(f, h)
        for g in range(H.dim):
            eg = basis_sparse(f, g)
            hg = H.mul_sparse(eh, eg)
            for m in range(act.m_dim):
                em = basis_sparse(f, m)
                assoc.check((h, g, m),
                            act.act(eh, act.act(eg, em)),
                            act.act(hg, em))
    assoc.finish()
    return rep


def check_comodule(H, coact):
    """Counital and coassociative right comodule laws."""
    _require_coaction_dims(H, coact)
    f = H.field
    rep = VerificationReport()
    counital = LawAccumulator(rep, f, "comod.counital")
    coassoc = LawAccumulator(rep, f, "comod.coassoc")
    for m in range(coact.m_dim):
        em = basis_sparse(f, m)
        rm = coact.coact(em)
        ce = {}
        for (m1, h), c in rm.items():
            sadd(f, ce, (m1,), f.mul(c, H.counit[h]))
        counital.check((m,), ce, em)
        lhs, rhs = {}, {}
        for (m1, h), c in rm.items():
            for (m2, h2), c2 in coact.coact(basis_sparse(f, m1)).items():
                sadd(f, lhs, (m2, h2, h), f.mul(c, c2))
            for (a, b), c2 in H.delta_sparse(basis_sparse(f, h)).items():
                sadd(f, rhs, (m1, a, b), f.mul(c, c2))
        coassoc.check((m,), lhs, rhs)
    counital.finish()
    coassoc.finish()
    return rep


def check_quasicomodule(H, coact):
    """Counitality plus the two antipode-cancellation laws of the coaction."""
    _require_coaction_dims(H, coact)
    f = H.field
    rep = VerificationReport()
    counital = LawAccumulator(rep, f, "cqm.counital")
    left = LawAccumulator(rep, f, "cqm2.left")
    right = LawAccumulator(rep, f, "cqm2.right")
    one = H.unit_sparse()
    for m in range(coact.m_dim):
        em = basis_sparse(f, m)
        rm = coact.coact(em)
        ce = {}
        for (m1, h), c in rm.items():
            sadd(f, ce, (m1,), f.mul(c, H.counit[h]))
        counital.check((m,), ce, em)
        expected = {}
        for (m1,), a in em.items():
            for (u,), b in one.items():
                sadd(f, expected, (m1, u), f.mul(a, b))
        lhs, rhs = {}, {}
        for (m0, h), c in rm.items():
            sh = H.antipode_sparse(basis_sparse(f, h))
            for (m00, h0), c2 in coact.coact(basis_sparse(f, m0)).items():
                cc = f.mul(c, c2)
                e0 = basis_sparse(f, h0)
                for (x,), v in H.mul_sparse(e0, sh).items():
                    sadd(f, lhs, (m00, x), f.mul(cc, v))
                s0 = H.antipode_sparse(e0)
                eh = basis_sparse(f, h)
                for (x,), v in H.mul_sparse(s0, eh).items():
                    sadd(f, rhs, (m00, x), f.mul(cc, v))
        left.check((m,), lhs, expected)
        right.check((m,), rhs, expected)
    counital.finish()
    left.finish()
    right.finish()
    return rep


def diagonal_action(H, act1, act2):
    """Action on the flattened M (x) N through the coproduct of H."""
    _require_action_dims(H, act1)
    _require_action_dims(H, act2)
    f = H.field
    n2 = act2.m_dim
    entries = {}
    for h in range(H.dim):
        for (h1, h2), c in H.delta_sparse(basis_sparse(f, h)).items():
            for m in range(act1.m_dim):
                for m2, c1 in act1._pairs(h1, m):
                    for n in range(n2):
                        for np, c2 in act2._pairs(h2, n):
                            key = (h, m * n2 + n, m2 * n2 + np)
                            cur = entries.get(key, f.zero)
                            entries[key] = f.add(
                                cur, f.mul(c, f.mul(c1, c2)))
    return ActionData.from_entries(
        f, H.dim, act1.m_dim * n2,
        ((h, m, m2, c) for (h, m, m2), c in entries.items()))


def tensor_coaction(H, co1, co2):
    """Coaction on the flattened M (x) N, last legs multiplied in H."""
    _require_coaction_dims(H, co1)
    _require_coaction_dims(H, co2)
    f = H.field
    n2 = co2.m_dim
    entries = {}
    for m in range(co1.m_dim):
        for (mp, h1), c1 in co1._pairs(m):
            for n in range(n2):
                for (np, h2), c2 in co2._pairs(n):
                    cc = f.mul(c1, c2)
                    for k, c in H.mu.mul_pairs(h1, h2):
                        key = (m * n2 + n, mp * n2 + np, k)
                        cur = entries.get(key, f.zero)
                        entries[key] = f.add(cur, f.mul(cc, c))
    return CoactionData.from_entries(
        f, co1.m_dim * n2, H.dim,
        ((m, m2, h, c) for (m, m2, h), c in entries.items()))


def check_qm_algebra(H, alg, act):
    """Action respects the product and unit of the target algebra."""
    _require_action_dims(H, act)
    if alg.dim != act.m_dim:
        raise DimMismatch("algebra dim != action M_dim")
    f = H.field
    rep = VerificationReport()
    mult = LawAccumulator(rep, f, "qmalg.mult")
    for h in range(H.dim):
        eh = basis_sparse(f, h)
        dh = H.delta_sparse(eh)
        for a in range(alg.dim):
            ea = basis_sparse(f, a)
            for b in range(alg.dim):
                eb = basis_sparse(f, b)
                lhs = {}
                for (h1, h2), c in dh.items():
                    ha = act.act(basis_sparse(f, h1), ea)
                    hb = act.act(basis_sparse(f, h2), eb)
                    for k, v in mul_sparse_tensor(f, alg.mu, ha, hb).items():
                        sadd(f, lhs, k, f.mul(c, v))
                rhs = act.act(eh, mul_sparse_tensor(f, alg.mu, ea, eb))
                mult.check((h, a, b), lhs, rhs)
    mult.finish()
    unit = LawAccumulator(rep, f, "qmalg.unit")
    one_a = {(i,): c for i, c in alg.unit.nonzero()}
    for h in range(H.dim):
        eh = basis_sparse(f, h)
        unit.check((h,), act.act(eh, one_a), sscale(f, one_a, H.counit[h]))
    unit.finish()
    return rep


def check_qm_coalgebra(H, coalg, act):
    """Action respects the coproduct and counit of the target coalgebra."""
    _require_action_dims(H, act)
    if coalg.dim != act.m_dim:
        raise DimMismatch("coalgebra dim != action M_dim")
    f = H.field
    rep = VerificationReport()
    comult = LawAccumulator(rep, f, "qmcoalg.comult")
    counit = LawAccumulator(rep, f, "qmcoalg.counit")
    for h in range(H.dim):
        eh = basis_sparse(f, h)
        dh = H.delta_sparse(eh)
        for cidx in range(coalg.dim):
            ec = basis_sparse(f, cidx)
            hc = act.act(eh, ec)
            lhs = split_sparse_tensor(f, coalg.delta, hc)
            rhs = {}
            for (h1, h2), c in dh.items():
                for (c1, c2), c2v in split_sparse_tensor(
                        f, coalg.delta, ec).items():
                    cc = f.mul(c, c2v)
                    t1 = act.act(basis_sparse(f, h1), basis_sparse(f, c1))
                    t2 = act.act(basis_sparse(f, h2), basis_sparse(f, c2))
                    for (x,), v1 in t1.items():
                        for (y,), v2 in t2.items():
                            sadd(f, rhs, (x, y),
                                 f.mul(cc, f.mul(v1, v2)))
            comult.check((h, cidx), lhs, rhs)
            lhs_eps = f.zero
            for (x,), v in hc.items():
                lhs_eps = f.add(lhs_eps, f.mul(v, coalg.counit[x]))
            rhs_eps = f.mul(H.counit[h], coalg.counit[cidx])
            counit.check((h, cidx),
                         {(): lhs_eps} if lhs_eps != f.zero else {},
                         {(): rhs_eps} if rhs_eps != f.zero else {})
    comult.finish()
    counit.finish()
    return rep


def check_antipode_linear(H, A, act):
    """S of the acted-on Hopf structure commutes with the action."""
    _require_action_dims(H, act)
    if A.dim != act.m_dim:
        raise DimMismatch("structure dim != action M_dim")
    f = H.field
    rep = VerificationReport()
    acc = LawAccumulator(rep, f, "antipode.linear")
    for h in range(H.dim):
        eh = basis_sparse(f, h)
        for a in range(A.dim):
            ea = basis_sparse(f, a)
            acc.check((h, a),
                      A.antipode_sparse(act.act(eh, ea)),
                      act.act(eh, A.antipode_sparse(ea)))
    acc.finish()
    return rep


def _tensor_mixed_mul(f, mu_m, H, u2, v2):
    """Product on M (x) H of 2-leg elements (first leg via mu_m)."""
    out = {}
    for (a, h), ca in u2.items():
        for (b, g), cb in v2.items():
            coeff = f.mul(ca, cb)
            prod_m = mul_sparse_tensor(
                f, mu_m, basis_sparse(f, a), basis_sparse(f, b))
            prod_h = H.mul_sparse(basis_sparse(f, h), basis_sparse(f, g))
            for (x,), cx in prod_m.items():
                for (y,), cy in prod_h.items():
                    sadd(f, out, (x, y), f.mul(coeff, f.mul(cx, cy)))
    return out


def check_coqm_algebra(H, alg, coact):
    """Coaction is an algebra map into A (x) H."""
    _require_coaction_dims(H, coact)
    if alg.dim != coact.m_dim:
        raise DimMismatch("algebra dim != coaction M_dim")
    f = H.field
    rep = VerificationReport()
    mult = LawAccumulator(rep, f, "coqmalg.mult")
    for a in range(alg.dim):
        ea = basis_sparse(f, a)
        ra = coact.coact(ea)
        for b in range(alg.dim):
            eb = basis_sparse(f, b)
            lhs = coact.coact(mul_sparse_tensor(f, alg.mu, ea, eb))
            rhs = _tensor_mixed_mul(f, alg.mu, H, ra, coact.coact(eb))
            mult.check((a, b), lhs, rhs)
    mult.finish()
    unit = LawAccumulator(rep, f, "coqmalg.unit")
    one_a = {(i,): c for i, c in alg.unit.nonzero()}
    expected = {}
    for (i,), c1 in one_a.items():
        for (u,), c2 in H.unit_sparse().items():
            sadd(f, expected, (i, u), f.mul(c1, c2))
    unit.check((), coact.coact(one_a), expected)
    unit.finish()
    return rep


def check_coqm_coalgebra(H, coalg, coact):
    """Coaction and coproduct of C commute in the comodule-coalgebra sense."""
    _require_coaction_dims(H, coact)
    if coalg.dim != coact.m_dim:
        raise DimMismatch("coalgebra dim != coaction M_dim")
    f = H.field
    rep = VerificationReport()
    comult = LawAccumulator(rep, f, "coqmcoalg.comult")
    counit = LawAccumulator(rep, f, "coqmcoalg.counit")
    one = H.unit_sparse()
    for cidx in range(coalg.dim):
        ec = basis_sparse(f, cidx)
        lhs = {}
        for (c0, h), c in coact.coact(ec).items():
            for (c1, c2), c2v in split_sparse_tensor(
                    f, coalg.delta, basis_sparse(f, c0)).items():
                sadd(f, lhs, (c1, c2, h), f.mul(c, c2v))
        rhs = {}
        for (c1, c2), cv in split_sparse_tensor(f, coalg.delta, ec).items():
            for (c10, h1), v1 in coact.coact(basis_sparse(f, c1)).items():
                for (c20, h2), v2 in coact.coact(basis_sparse(f, c2)).items():
                    cc = f.mul(cv, f.mul(v1, v2))
                    for k, c in H.mu.mul_pairs(h1, h2):
                        sadd(f, rhs, (c10, c20, k), f.mul(cc, c))
        comult.check((cidx,), lhs, rhs)
        lhs_eps = {}
        for (c0, h), c in coact.coact(ec).items():
            sadd(f, lhs_eps, (h,), f.mul(c, coalg.counit[c0]))
        counit.check((cidx,), lhs_eps,
                     sscale(f, one, coalg.counit[cidx]))
    comult.finish()
    counit.finish()
    return rep


def check_antipode_colinear(H, C, coact):
    """S of the coacted-on Hopf structure is a comodule map."""
    _require_coaction_dims(H, coact)
    if C.dim != coact.m_dim:
        raise DimMismatch("structure dim != coaction M_dim")
    f = H.field
    rep = VerificationReport()
    acc = LawAccumulator(rep, f, "antipode.colinear")
    for cidx in range(C.dim):
        ec = basis_sparse(f, cidx)
        lhs = coact.coact(C.antipode_sparse(ec))
        rhs = {}
        for (c0, h), c in coact.coact(ec).items():
            for (x,), v in C.antipode_sparse(basis_sparse(f, c0)).items():
                sadd(f, rhs, (x, h), f.mul(c, v))
        acc.check((cidx,), lhs, rhs)
    acc.finish()
    return rep
