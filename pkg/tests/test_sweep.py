import pytest

from spinsweep import numfield, sweep
from spinsweep.numfield import PrimeDeg1
from spinsweep.sweep import (
    SweepConfig,
    Tally,
    build_tables,
    classify_prime,
    emit_csv,
    odd_primes_in,
    run_sweep,
)


@pytest.fixture(scope="module")
def tables7(spec7):
    return build_tables(spec7)


@pytest.fixture(scope="module")
def result7(spec7):
    cfg = SweepConfig(spec=spec7, limit=6000, chunk_size=1500)
    return run_sweep(cfg, jobs=1)


def test_odd_primes_in():
    assert odd_primes_in(3, 30) == [3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert odd_primes_in(0, 3) == []
    chunks = odd_primes_in(3, 97) + odd_primes_in(97, 541) + odd_primes_in(541, 1000)
    assert chunks == odd_primes_in(3, 1000)


def test_config_validation(spec7):
    with pytest.raises(ValueError):
        SweepConfig(spec=spec7, limit=50)
    with pytest.raises(ValueError):
        SweepConfig(spec=spec7, limit=1000, chunk_size=0)


def test_classify_non_split_is_none(tables7):
    assert classify_prime(tables7, 11) is None  # 11 = 4 mod 7
    assert classify_prime(tables7, 5) is None


def test_classify_13_and_29(tables7):
    r13 = classify_prime(tables7, 13)
    assert r13.p == 13 and r13.root_a == 7 and r13.p_mod4 == 1
    assert r13.spins == (-1, 1) and not r13.in_R and not r13.in_F
    r29 = classify_prime(tables7, 29)
    assert r29.p == 29 and r29.p_mod4 == 1
    assert all(s in (1, -1) for s in r29.spins)


def test_classify_respects_split_rule(result7):
    for rec in result7.records:
        assert rec.p % 7 in (1, 6)


def test_spin_not_in_F_when_any_minus(result7):
    for rec in result7.records:
        assert rec.in_F == all(s == 1 for s in rec.spins)
        assert rec.in_F <= rec.in_R


def test_tally_invariants(result7):
    t = result7.tally
    t.validate()
    assert t.violations == 0
    assert t.f_plus <= t.r_plus <= t.s_plus
    assert t.f_minus <= t.r_minus <= t.s_minus
    assert sum(t.histogram.values()) == t.s_plus + t.s_minus
    assert result7.skipped_ramified == [7]


def test_tally_merge_is_addition(result7):
    recs = result7.records
    half = len(recs) // 2
    t1, t2, t3 = Tally(), Tally(), Tally()
    for r in recs[:half]:
        t1.add_record(r)
    for r in recs[half:]:
        t2.add_record(r)
    for r in recs:
        t3.add_record(r)
    t1.merge(t2)
    assert t1 == t3
    # commutativity
    ta, tb = Tally(), Tally()
    for r in recs[half:]:
        ta.add_record(r)
    for r in recs[:half]:
        tb.add_record(r)
    ta.merge(tb)
    assert ta == t3


def test_determinism_across_chunk_sizes(spec7, result7):
    for chunk in (700, 6000):
        res = run_sweep(SweepConfig(spec=spec7, limit=6000, chunk_size=chunk), jobs=1)
        assert res.tally == result7.tally
        assert emit_csv(res.records, 3) == emit_csv(result7.records, 3)


def test_determinism_with_workers(spec7, result7):
    res = run_sweep(SweepConfig(spec=spec7, limit=6000, chunk_size=1500), jobs=2)
    assert res.tally == result7.tally
    assert emit_csv(res.records, 3) == emit_csv(result7.records, 3)


def test_csv_format(result7):
    text = emit_csv(result7.records, 3)
    lines = text.strip().split("\n")
    assert lines[0] == "p,p_mod4,root_a,spin_1,spin_2,in_R,in_F,m4_class_bits"
    assert len(lines) - 1 == result7.tally.s_plus + result7.tally.s_minus
    ps = [int(line.split(",")[0]) for line in lines[1:]]
    assert ps == sorted(ps)
    assert emit_csv([], 3).strip() == lines[0]


def test_csv_row_fields(result7):
    rec = result7.records[0]
    line = emit_csv([rec], 3).strip().split("\n")[1]
    parts = line.split(",")
    assert parts[0] == str(rec.p)
    assert parts[-1] == "".join(map(str, rec.m4_bits))
    assert parts[-2] == str(int(rec.in_F))
    assert parts[-3] == str(int(rec.in_R))


def test_report_rows_structure(result7):
    names = [row[0] for row in result7.report_rows]
    for expected in ("F/S", "F+/S+", "F-/S-", "R+/S+", "R-/S-", "F+/R+", "F-/R-"):
        assert expected in names
    hist_rows = [n for n in names if n.startswith("hist[")]
    assert len(hist_rows) == 8


def test_histogram_sign_sectors(result7, star7):
    for bits, sign in result7.tally.class_sign.items():
        assert star7.norm_sign[bits] == sign


def test_format_report_columns(result7):
    text = sweep.format_report(result7)
    assert "quantity" in text and "theoretical" in text and "pass/fail" in text
    assert ("PASS" in text) or ("FAIL" in text)


def test_violation_on_tampered_star_table(spec7):
    # flipping the star value on a whole orbit must trip the two-route
    # R-membership comparison (single-class flips are already rejected by
    # the StarTable constructor itself)
    from spinsweep.residue import rot

    tables = build_tables(spec7)
    rec = classify_prime(tables, 13)
    bits = rec.m4_bits
    tampered = dict(tables.star.star)
    for k in range(3):
        tampered[rot(bits, k)] = -tampered[rot(bits, k)]
    broken = sweep.FieldTables(
        tables.spec,
        tables.family,
        type(tables.star)(tampered, tables.star.norm_sign,
                          tables.star.ker_plus, tables.star.ker_minus),
        tables.pairing,
    )
    with pytest.raises(sweep.SpinRelationViolation):
        classify_prime(broken, 13)


def test_classify_prime_equivariance_toggle(tables7):
    fast = classify_prime(tables7, 13, check_r4_equivariance=False)
    full = classify_prime(tables7, 13, check_r4_equivariance=True)
    assert fast == full
