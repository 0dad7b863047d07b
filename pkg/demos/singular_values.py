"""Singular values of the order-10 functions at tau = -1/sqrt(-10), then at tau/2."""

import mpmath

from order10.classfield import ImagQuadPoint, class_polynomial, g_eval, halve_point, singular_values

PREC = 120


def show(sv, names):
    for name in names:
        v = sv[name]
        cand = v.candidate
        with mpmath.workdps(30):
            approx = mpmath.nstr(v.value.value.real, 20)
        if cand is None:
            print(f"  {name:6s} {approx}  (not recognized: {v.note})")
            continue
        rad = cand.radical()
        poly = " ".join(map(str, cand.minpoly))
        print(f"  {name:6s} {approx}  minpoly [{poly}]" + (f"  = {rad}" if rad else ""))


def main():
    cp = class_polynomial(-40, PREC)
    print(f"class polynomial of g0 for -40: {cp.coeffs}")
    for s in cp.data:
        print(f"  form {s.form.as_list()} -> point {s.point.as_tuple()} (shift k={s.k_x})")

    # -1/sqrt(-10) is the root of 10 X^2 + 1
    base = ImagQuadPoint(10, 0, 1)
    print("\nat -1/sqrt(-10):")
    show(singular_values(base, PREC), ("g0", "U0", "J", "invI", "invg1", "invg2", "T1", "T2"))

    # tau/2 is the root of 40 X^2 + 1; g there comes from g(tau) through G_2
    half = ImagQuadPoint(40, 0, 1)
    h = halve_point(half, g_eval(base, PREC), PREC)
    print(f"\nat -1/(2 sqrt(-10)), {len(h.candidates)} roots of G_2(X, g(tau)), one kept:")
    show(singular_values(half, PREC, g0=h.g0), ("g0", "U0", "J", "I", "g1", "g2"))


if __name__ == "__main__":
    main()
