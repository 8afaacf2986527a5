import pytest

from spinsweep import numfield, residue
from spinsweep.numfield import (
    BadUnit,
    C4Violation,
    EvenClassNumber,
    EvenDegree,
    FieldConfigError,
    NotAutomorphism,
    PrimeDeg1,
    RamifiedPrime,
    conjugate_prime,
    eval_mod,
    generator_of_power,
    legendre_deg1,
    load_spec,
    r4_of_prime,
    spin,
    split_completely,
)

GOOD7 = """
name = "simplest-cubic-7"
n = 3
f = [-1, -2, 1, 1]
sigma = [-2, 0, 1]
h = 1
unit = [0, 1, 0]
unit = [1, 1, 0]
disc_f = 49
"""


# -- config loading -----------------------------------------------------------


def test_load_accepts_shipped_fields(spec7, spec9):
    assert spec7.n == spec9.n == 3
    assert spec7.disc_f == 49 and spec9.disc_f == 81
    assert len(spec7.unit_by_signature) == 8


def test_load_from_text():
    spec = load_spec(GOOD7)
    assert spec.name == "simplest-cubic-7"
    assert spec.f == (-1, -2, 1, 1)


def test_reject_reducible_mod_2():
    bad = GOOD7.replace("[-1, -2, 1, 1]", "[0, -1, 0, 1]").replace("disc_f = 49", "disc_f = 4")
    with pytest.raises(C4Violation):
        load_spec(bad)  # x^3 - x


def test_reject_even_degree():
    text = """
name = "bad"
n = 2
f = [-1, 0, 1]
sigma = [0, 1]
h = 1
unit = [0, 1]
disc_f = 4
"""
    with pytest.raises(EvenDegree):
        load_spec(text)


def test_reject_even_class_number():
    with pytest.raises(EvenClassNumber):
        load_spec(GOOD7.replace("h = 1", "h = 2"))


def test_reject_non_automorphism():
    # x^2 - 2 generates the action of x^3 - 3x + 1, not of x^3 - 3x - 1
    text = GOOD7.replace("[-1, -2, 1, 1]", "[-1, -3, 0, 1]").replace("disc_f = 49", "disc_f = 81")
    with pytest.raises(NotAutomorphism):
        load_spec(text)


def test_reject_identity_sigma():
    with pytest.raises(NotAutomorphism):
        load_spec(GOOD7.replace("sigma = [-2, 0, 1]", "sigma = [0, 1]"))


def test_reject_bad_unit():
    with pytest.raises(BadUnit):
        load_spec(GOOD7.replace("unit = [0, 1, 0]", "unit = [2, 0, 0]"))


def test_reject_signature_deficient_units():
    # theta and -theta^{-1}... using theta twice cannot span the sign patterns
    with pytest.raises(BadUnit):
        load_spec(GOOD7.replace("unit = [1, 1, 0]", "unit = [0, 1, 0]"))


def test_reject_unknown_key():
    with pytest.raises(FieldConfigError):
        load_spec(GOOD7 + "\nextra = 1")


def test_reject_wrong_disc():
    with pytest.raises(FieldConfigError):
        load_spec(GOOD7.replace("disc_f = 49", "disc_f = 47"))


def test_reject_missing_key():
    with pytest.raises(FieldConfigError):
        load_spec(GOOD7.replace('name = "simplest-cubic-7"', ""))


def test_reject_duplicate_key():
    with pytest.raises(FieldConfigError):
        load_spec(GOOD7 + "\nn = 3")


# -- embeddings ---------------------------------------------------------------


def test_embeddings_isolate_three_roots(spec7):
    ivals = spec7.embeddings.intervals()
    assert len(ivals) == 3
    for (lo1, hi1), (lo2, hi2) in zip(ivals, ivals[1:]):
        assert hi1 < lo2  # disjoint and ascending
    # roots of x^3 + x^2 - 2x - 1 are approximately -1.80, -0.445, 1.25
    approx = [float((lo + hi) / 2) for lo, hi in ivals]
    for got, want in zip(approx, (-1.8019, -0.4450, 1.2470)):
        assert abs(got - want) < 1e-3


def test_signs_of_theta(spec7):
    # theta evaluates to the root itself: signs follow the root signs
    assert spec7.embeddings.signs_of((0, 1, 0)) == (-1, -1, 1)
    assert spec7.embeddings.signs_of((1, 0, 0)) == (1, 1, 1)
    with pytest.raises(ValueError):
        spec7.embeddings.signs_of((0, 0, 0))


# -- splitting ----------------------------------------------------------------


def brute_roots(spec, p):
    return [a for a in range(p) if eval_mod(spec.f, a, p) == 0]


def test_split_13(spec7):
    roots = split_completely(spec7, 13)
    assert roots == brute_roots(spec7, 13) == [7, 8, 10]


def test_split_5_empty(spec7):
    assert split_completely(spec7, 5) == []
    assert brute_roots(spec7, 5) == []


def test_split_7_ramified(spec7):
    with pytest.raises(RamifiedPrime):
        split_completely(spec7, 7)


@pytest.mark.parametrize("p", [11, 17, 19, 23, 29, 31, 37, 41, 43, 97, 101, 9973])
def test_split_matches_brute_force(spec7, p):
    try:
        roots = split_completely(spec7, p)
    except RamifiedPrime:
        pytest.skip("ramified")
    brute = brute_roots(spec7, p)
    assert roots == (sorted(brute) if len(brute) == 3 else [])


def test_split_rule_mod_conductor(spec7):
    # the conductor-7 field splits p exactly when p = +-1 mod 7
    for p in (13, 29, 41, 43, 71, 83, 97, 113):
        expect = p % 7 in (1, 6)
        assert bool(split_completely(spec7, p)) == expect


# -- conjugation --------------------------------------------------------------


def test_conjugate_orbit(spec7):
    P = PrimeDeg1(13, 7)
    Q = conjugate_prime(spec7, P)
    assert Q == PrimeDeg1(13, 10)  # s(10) = 98 = 7 mod 13
    R = conjugate_prime(spec7, Q)
    assert R == PrimeDeg1(13, 8)
    assert conjugate_prime(spec7, R) == P  # n applications = identity
    assert len({P, Q, R}) == 3  # full orbit, no stabilizer


def test_conjugate_rejects_foreign_prime(spec7):
    with pytest.raises(ValueError):
        conjugate_prime(spec7, PrimeDeg1(13, 1))


# -- generators ---------------------------------------------------------------


def test_generator_verification_identity(spec7):
    P = PrimeDeg1(13, 7)
    alpha = generator_of_power(spec7, P, 1)
    assert spec7.norm(alpha) == 13
    assert eval_mod(alpha, 7, 13) == 0
    assert all(s > 0 for s in spec7.embeddings.signs_of(alpha))


def test_generator_unit_square_invariance(spec7):
    P = PrimeDeg1(13, 7)
    alpha = generator_of_power(spec7, P, 1)
    u = spec7.pad(spec7.units[0])
    adjusted = spec7.mul(spec7.mul(u, u), alpha)
    # still a totally positive generator of the same ideal
    assert spec7.norm(adjusted) == 13
    assert all(s > 0 for s in spec7.embeddings.signs_of(adjusted))
    assert eval_mod(adjusted, 7, 13) == 0


@pytest.mark.parametrize("p", [13, 29, 41, 43, 71, 83, 97, 967, 10009])
def test_generator_many_primes(spec7, p):
    roots = split_completely(spec7, p)
    if not roots:
        pytest.skip("not split")
    for a in roots:
        alpha = generator_of_power(spec7, PrimeDeg1(p, a), 1)
        assert spec7.norm(alpha) == p
        assert eval_mod(alpha, a, p) == 0


def test_generator_rejects_even_h(spec7):
    with pytest.raises(ValueError):
        generator_of_power(spec7, PrimeDeg1(13, 7), 2)


def test_generator_cube_power(spec7):
    # h = 3 exercises the ideal-power path: norm 13^3, contained in P^3
    P = PrimeDeg1(13, 7)
    alpha = generator_of_power(spec7, P, 3)
    assert spec7.norm(alpha) == 13**3
    assert all(s > 0 for s in spec7.embeddings.signs_of(alpha))
    # the generator of P^3 reduces to 0 under theta -> 7 (it lies in P)
    assert eval_mod(alpha, 7, 13) == 0


# -- residue symbols ----------------------------------------------------------


def test_legendre_one_and_squares(spec7):
    Q = PrimeDeg1(13, 7)
    assert legendre_deg1(spec7, spec7.one(), Q) == 1
    for beta in ((1, 2, 0), (3, 0, 1), (0, 1, 1)):
        sq = spec7.mul(beta, beta)
        if eval_mod(sq, 7, 13) != 0:
            assert legendre_deg1(spec7, sq, Q) == 1


def test_legendre_against_square_set(spec7):
    q, b = 13, 7
    squares = {(x * x) % q for x in range(1, q)}
    for t in range(1, q):
        got = legendre_deg1(spec7, (t, 0, 0), PrimeDeg1(q, b))
        assert got == (1 if t in squares else -1)
    assert legendre_deg1(spec7, (13, 0, 0), PrimeDeg1(q, b)) == 0


def test_spin_values_and_product_identity(spec7, family7):
    P = PrimeDeg1(13, 7)
    s1 = spin(spec7, P, 1)
    s2 = spin(spec7, P, 2)
    assert s1 in (1, -1) and s2 in (1, -1)
    # the product must be the dyadic Hilbert symbol of the generator and its conjugate
    alpha = generator_of_power(spec7, P, 1)
    r3 = family7.level(3)
    a8 = tuple(c % 8 for c in alpha)
    assert s1 * s2 == residue.hilbert2(r3, a8, r3.apply_tau(a8, 1))


def test_spin_orbit_is_permutation(spec7):
    P = PrimeDeg1(13, 7)
    values = sorted((spin(spec7, P, 1), spin(spec7, P, 2)))
    Q = conjugate_prime(spec7, P)
    values_q = sorted((spin(spec7, Q, 1), spin(spec7, Q, 2)))
    assert values == values_q


def test_spin_rejects_bad_k(spec7):
    with pytest.raises(ValueError):
        spin(spec7, PrimeDeg1(13, 7), 0)
    with pytest.raises(ValueError):
        spin(spec7, PrimeDeg1(13, 7), 3)


# -- r4 map -------------------------------------------------------------------


def test_r4_equivariance_and_norm_sign(spec7, family7, star7):
    for p in (13, 29, 41, 43):
        roots = split_completely(spec7, p)
        P = PrimeDeg1(p, roots[0])
        bits = r4_of_prime(spec7, family7, P)
        assert star7.norm_sign[bits] == (1 if p % 4 == 1 else -1)
        Q = conjugate_prime(spec7, P)
        assert r4_of_prime(spec7, family7, Q) == residue.rot(bits, 1)


def test_r4_plus_classes_for_one_mod_four(spec7, family7, star7):
    for p in (13, 29, 41, 97, 113):
        roots = split_completely(spec7, p)
        if not roots or p % 4 != 1:
            continue
        bits = r4_of_prime(spec7, family7, PrimeDeg1(p, roots[0]))
        assert star7.norm_sign[bits] == 1


# -- symbol flip (reciprocity surrogate) ---------------------------------------


def test_symbol_flip_for_one_mod_4_generators(spec7):
    """For beta = 1 mod 4O totally positive, the symbol is symmetric between primes."""
    split = []
    for p in range(3, 700, 2):
        if all(p % q for q in range(3, int(p**0.5) + 1, 2)):
            try:
                roots = split_completely(spec7, p)
            except RamifiedPrime:
                continue
            if roots:
                split.append(PrimeDeg1(p, roots[0]))
    # unit squares available for nudging a generator into 1 + 4O
    unit_sq = []
    th = spec7.pad(spec7.units[0])
    tp = spec7.pad(spec7.units[1])
    for i in range(7):
        for j in range(7):
            u = spec7.one()
            for _ in range(i):
                u = spec7.mul(u, th)
            for _ in range(j):
                u = spec7.mul(u, tp)
            unit_sq.append(spec7.mul(u, u))
    flips = 0
    for Q in split:
        beta = generator_of_power(spec7, Q, 1)
        adjusted = None
        for usq in unit_sq:
            cand = spec7.mul(beta, usq)
            if all(c % 4 == (1 if i == 0 else 0) for i, c in enumerate(cand)):
                adjusted = cand
                break
        if adjusted is None:
            continue
        for P in split[:6]:
            if P.p == Q.p:
                continue
            alpha = generator_of_power(spec7, P, 1)
            assert legendre_deg1(spec7, alpha, Q) == legendre_deg1(spec7, adjusted, P)
            flips += 1
    assert flips >= 3, "expected some generators congruent to 1 mod 4O below 700"


# -- precision machinery -------------------------------------------------------


def test_interval_refinement_decides_tiny_values(spec7):
    # theta - (a close dyadic approximation) has a tiny but nonzero sign
    lo, hi = spec7.embeddings.intervals()[2]
    mid = (lo + hi) / 2
    num, den = mid.numerator, mid.denominator
    # value (den*theta - num)/den at the third root is within the interval width
    signs = spec7.embeddings.signs_of((-num, den, 0))
    assert signs[2] in (-1, 1)
