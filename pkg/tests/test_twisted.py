import random

from torellikit.autos import classify
from torellikit.lpres import nielsen_relators, zn_relators
from torellikit.symwords import (
    C,
    I,
    M,
    Mc,
    alphabet,
    interpret,
    signed_alphabet,
    std_basis,
    token_inv,
)
from torellikit.twisted import (
    birman_data,
    canonical_zword,
    interpret_aut,
    iota1,
    iota2,
    lambda_bar,
    lambda_gen,
    tb_check,
    tlambda1,
    tlambda2,
    trivial_data,
    zn_vector,
)
from torellikit.semidirect import aut_act_on_Zn

N = 3
B = std_basis(N)
Y = B.y(1)


def test_lambda_bar_degenerate_and_kernel():
    assert lambda_bar((), (1, 0, 0), N).is_identity
    assert lambda_bar((M(0, 1, 1),), (0,) * N, N).is_identity
    rng = random.Random(2)
    sa = signed_alphabet("S_A", N)
    for _ in range(30):
        w = tuple(rng.choice(sa) for _ in range(rng.randint(0, 5)))
        z = tuple(rng.randint(-2, 2) for _ in range(N))
        assert classify(lambda_bar(w, z, N)).in_KIA


def test_lambda_gen_table_rows():
    from torellikit.symwords import P

    e1 = (1, 0, 0)
    # inversion against its own y-transvection
    assert lambda_gen(I(0), M(0, 1, Y), N) == (C(0, Y),)
    assert lambda_gen(I(0), token_inv(M(0, 1, Y)), N) == (C(0, Y, -1),)
    assert interpret(lambda_gen(I(0), M(0, 1, Y), N), B) == lambda_bar((I(0),), e1, N)
    # transvection against the y-transvection at its moving letter
    assert lambda_gen(M(0, 1, 1), M(0, 1, Y), N) == (Mc(0, 1, Y, -1, 1, -1),)
    # default entries are trivial
    assert lambda_gen(P(0, 1), M(2, 1, Y), N) == ()
    assert lambda_gen(I(0), M(1, 1, Y), N) == ()


def test_lambda_gen_matches_twisted_commutator_exhaustively():
    for f in signed_alphabet("S_A", N):
        for z in signed_alphabet("S_Z", N):
            sym = lambda_gen(f, z, N)
            assert interpret(sym, B) == lambda_bar((f,), zn_vector(z, N), N)


def test_tlambda1_base_cases_and_relators():
    assert not tlambda1(M(0, 1, 1), (), N)
    sz = signed_alphabet("S_Z", N)
    relators = [inst.word.tokens for inst in zn_relators(N)]
    relators += [(s, token_inv(s)) for s in sz]
    for f in signed_alphabet("S_A", N):
        for r in relators:
            value = tlambda1(f, r, N)
            assert interpret(value.tokens, B).is_identity


def test_tlambda1_expansion_identity():
    # the letterwise expansion satisfies the crossed-homomorphism shape
    rng = random.Random(6)
    sz = signed_alphabet("S_Z", N)
    sa = signed_alphabet("S_A", N)
    for _ in range(100):
        f = rng.choice(sa)
        w1 = tuple(rng.choice(sz) for _ in range(rng.randint(0, 3)))
        w2 = tuple(rng.choice(sz) for _ in range(rng.randint(0, 3)))
        lhs = interpret(tlambda1(f, w1 + w2, N).tokens, B)
        f_aut = interpret_aut((f,), N)
        w1_vec = [0] * N
        for tok in w1:
            w1_vec = [a + b for a, b in zip(w1_vec, zn_vector(tok, N))]
        moved = aut_act_on_Zn(f_aut, tuple(w1_vec))
        conj = iota2(moved, N)
        rhs = interpret(tlambda1(f, w1, N).tokens, B) * (
            conj * interpret(tlambda1(f, w2, N).tokens, B) * conj.inverse()
        )
        assert lhs == rhs


def test_tlambda_well_defined_under_relator_insertion():
    rng = random.Random(16)
    sz = signed_alphabet("S_Z", N)
    sa = signed_alphabet("S_A", N)
    z_relators = [inst.word.tokens for inst in zn_relators(N)]
    z_relators += [(s, token_inv(s)) for s in sz]
    for _ in range(40):
        f = rng.choice(sa)
        w = tuple(rng.choice(sz) for _ in range(rng.randint(0, 4)))
        r = rng.choice(z_relators)
        pos = rng.randint(0, len(w))
        grown = w[:pos] + r + w[pos:]
        assert interpret(tlambda1(f, grown, N).tokens, B) == interpret(
            tlambda1(f, w, N).tokens, B
        )
    a_relators = [inst.word.tokens for inst in nielsen_relators(N)]
    a_relators += [(s, token_inv(s)) for s in sa]
    for _ in range(15):
        w = tuple(rng.choice(sa) for _ in range(rng.randint(0, 3)))
        r = rng.choice(a_relators)
        pos = rng.randint(0, len(w))
        grown = w[:pos] + r + w[pos:]
        z = tuple(rng.randint(-2, 2) for _ in range(N))
        assert interpret(tlambda2(grown, z, N).tokens, B) == interpret(
            tlambda2(w, z, N).tokens, B
        )


def test_tlambda2_nielsen_relators_die():
    units = [tuple(int(i == j) for i in range(N)) for j in range(N)]
    for inst in nielsen_relators(N):
        for e in units:
            assert interpret(tlambda2(inst.word.tokens, e, N).tokens, B).is_identity
    for s in signed_alphabet("S_A", N):
        for e in units:
            word = (s, token_inv(s))
            assert interpret(tlambda2(word, e, N).tokens, B).is_identity


def test_tlambda2_expansion_identity():
    # the two-sided expansion shape over a split first argument
    rng = random.Random(23)
    sa = signed_alphabet("S_A", N)
    for _ in range(60):
        w1 = tuple(rng.choice(sa) for _ in range(rng.randint(0, 3)))
        w2 = tuple(rng.choice(sa) for _ in range(rng.randint(0, 3)))
        z = tuple(rng.randint(-2, 2) for _ in range(N))
        lhs = interpret(tlambda2(w1 + w2, z, N).tokens, B)
        conj = iota1(interpret_aut(w1, N), N)
        moved_z = aut_act_on_Zn(interpret_aut(w2, N), z)
        rhs = (
            conj * interpret(tlambda2(w2, z, N).tokens, B) * conj.inverse()
        ) * interpret(tlambda2(w1, moved_z, N).tokens, B)
        assert lhs == rhs


def test_tlambda2_matches_twisted_commutator():
    rng = random.Random(0x5EED)
    sa = signed_alphabet("S_A", N)
    for _ in range(100):
        w = tuple(rng.choice(sa) for _ in range(rng.randint(0, 5)))
        z = tuple(rng.randint(-3, 3) for _ in range(N))
        assert interpret(tlambda2(w, z, N).tokens, B) == lambda_bar(w, z, N)


def test_canonical_zword():
    toks = canonical_zword((2, 0, -1), N)
    assert toks == (M(0, 1, Y), M(0, 1, Y), ("M", (2, 1), (Y, -1)))


def test_tb_axioms_semantic_and_trivial():
    for nn in (2, 3):
        assert tb_check(birman_data(nn), samples=40) == []
    assert tb_check(trivial_data(), samples=60) == []


def test_tb3_exhaustive_and_mutation():
    n = 2
    basis = std_basis(n)
    ks = [interpret((t,), basis) for t in alphabet("S_K", n)]
    assert tb_check(birman_data(n), samples=0, k_generators=ks) == []
    corrupted = birman_data(n, corrupt=lambda a, b: len(a) == 1 and a[0][0] == "I")
    fails = tb_check(corrupted, samples=0, k_generators=ks)
    assert fails and all(axiom == "TB3" for axiom, _ in fails)
