import math

from flagflow import _core as ff


def main():
    assert ff.m_alpha(3, 1) == 3
    assert ff.m_alpha(3, 1, "C") == 6

    names = ff.builtin_spec_names()
    assert "sl3-sym2-schottky" in names
    spec = ff.builtin_spec("sl3-one-generator")
    assert spec.d == 3 and spec.field == "R"

    back = ff.parse_spec(spec.to_json())
    assert back.theta == spec.theta

    lam = ff.jordan_projection([[2.0, 0, 0], [0, 1.0, 0], [0, 0, 0.5]])
    assert abs(lam[0] - math.log(2)) < 1e-12

    recs = ff.period_spectrum(spec, max_len=1)
    assert len(recs) == 2
    assert abs(recs[0]["period"] - 3 * math.log(4)) < 1e-9

    adm = ff.is_admissible(spec)
    assert adm["admissible"] and adm["margin"] > 0

    z = ff.log_zeta(spec, 0.5 + 0j, max_len=4)
    closed = -2 * math.log(1 - math.exp(-0.5 * 3 * math.log(4)))
    assert abs(z["log_zeta"] - closed) < 1e-10

    contact = ff.contact_test(3, s=[1.0, 0.0])
    assert contact[1] and not contact[2]

    res = ff.run_suite("rootdata", 7)
    assert res and all(r["pass"] for r in res)
    rep1 = ff.check_report("rootdata", 7)
    rep2 = ff.check_report("rootdata", 7)
    assert rep1 == rep2 and "PASS" in rep1

    print("python smoke ok")


if __name__ == "__main__":
    main()
