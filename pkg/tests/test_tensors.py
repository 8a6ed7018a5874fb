import random

from conftest import s3_table

from hopfloop import GF, QQ, Mat, Ten3, Vec, contract_mul, kron, loop_algebra
from hopfloop.tensors import (pair_index, sadd, sparse_to_vec, sscale,
                              unpair_index, vec_to_sparse)


def test_pair_index_roundtrip():
    for i in range(5):
        for j in range(7):
            assert unpair_index(pair_index(i, j, 7), 7) == (i, j)


def test_vec_basics():
    v = Vec.basis(QQ, 3, 1)
    assert v[1] == QQ.one and v[0] == QQ.zero
    assert v.nonzero() == [(1, QQ.one)]
    assert Vec.zeros(QQ, 3).nonzero() == []


def test_mat_apply_and_matmul():
    a = Mat(QQ, [[QQ.parse("1"), QQ.parse("2")],
                 [QQ.parse("3"), QQ.parse("4")]])
    b = Mat(QQ, [[QQ.parse("0"), QQ.parse("1")],
                 [QQ.parse("1"), QQ.parse("0")]])
    ab = a.matmul(b)
    assert ab.rows == ((QQ.parse("2"), QQ.parse("1")),
                       (QQ.parse("4"), QQ.parse("3")))
    v = Vec(QQ, [QQ.parse("1"), QQ.parse("-1")])
    assert a.apply(v).data == (QQ.parse("-1"), QQ.parse("-1"))
    assert a.transpose().rows[0] == (QQ.parse("1"), QQ.parse("3"))
    eye = Mat.identity(QQ, 2)
    assert a.matmul(eye) == a and eye.matmul(a) == a


def test_contract_mul_group_oracle():
    # in the S3 loop algebra the contraction of mu against two basis
    # vectors must reproduce the Cayley table entry
    table = s3_table()
    H = loop_algebra(table)
    for i in range(6):
        for j in range(6):
            out = contract_mul(H.mu, Vec.basis(QQ, 6, i), Vec.basis(QQ, 6, j))
            assert out.nonzero() == [(table.mul(i, j), QQ.one)]


def test_kron_oracle():
    one, two = QQ.parse("1"), QQ.parse("2")
    z = QQ.zero
    a = Mat(QQ, [[one, two], [z, one]])
    b = Mat(QQ, [[z, one], [one, z]])
    k = kron(a, b)
    assert k.nrows == 4 and k.ncols == 4
    # block (0,1) is 2*b
    assert k.rows[0][2] == z and k.rows[0][3] == two
    assert k.rows[1][2] == two and k.rows[1][3] == z
    # identity property
    assert kron(Mat.identity(QQ, 2), Mat.identity(QQ, 3)) == \
        Mat.identity(QQ, 6)


def test_ten3_sparse_views():
    entries = [(0, 0, 1, QQ.parse("2")), (1, 0, 0, QQ.one)]
    t = Ten3.from_entries(QQ, 2, entries)
    assert list(t.mul_pairs(0, 0)) == [(1, QQ.parse("2"))]
    assert list(t.mul_pairs(0, 1)) == []
    assert dict(t.split_pairs(1)) == {(0, 0): QQ.one}


def test_contract_mul_bilinear_random_gf7():
    f = GF(7)
    rng = random.Random(20260826)
    n = 4
    entries = [(i, j, rng.randrange(n), f.from_int(rng.randrange(1, 7)))
               for i in range(n) for j in range(n)]
    t = Ten3.from_entries(f, n, entries)

    def rand_vec():
        return Vec(f, [f.from_int(rng.randrange(7)) for _ in range(n)])

    for _ in range(25):
        u, v, w = rand_vec(), rand_vec(), rand_vec()
        a = f.from_int(rng.randrange(1, 7))
        lhs = contract_mul(t, Vec(f, [f.add(f.mul(a, u[i]), v[i])
                                      for i in range(n)]), w)
        t1 = contract_mul(t, u, w)
        t2 = contract_mul(t, v, w)
        rhs = Vec(f, [f.add(f.mul(a, t1[i]), t2[i]) for i in range(n)])
        assert lhs == rhs


def test_sparse_helpers_drop_zeros():
    acc = {}
    sadd(QQ, acc, (0,), QQ.one)
    sadd(QQ, acc, (0,), QQ.neg(QQ.one))
    assert acc == {}
    d = {(1,): QQ.parse("2")}
    assert sscale(QQ, d, QQ.zero) == {}
    v = sparse_to_vec(QQ, 3, {(2,): QQ.one})
    assert v == Vec.basis(QQ, 3, 2)
    assert vec_to_sparse(v) == {(2,): QQ.one}
