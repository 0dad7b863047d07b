"""Derive the modular equations of g and U at small levels and show their structure."""

import time

from order10 import derive_G, derive_U, pole_degrees, structure_checks, verify_modeq
from order10.modeq import transformed_G


def main():
    for n in (2, 3, 5):
        b = pole_degrees(n)
        t = time.perf_counter()
        G, U = derive_G(n), derive_U(n)
        print(f"level {n}: pole degrees d1={b.d1}, dn={b.dn}  ({time.perf_counter() - t:.1f} s)")
        print(f"  G_{n}(X, Y) = {G.to_text()}")
        print(f"  U_{n}(X, Y) = {U.to_text()}")
        for name, poly, fn in (("G", G, "g"), ("U", U, "U")):
            r = verify_modeq(poly, fn, n)
            print(f"  {name}_{n} vanishes on the series to O(q^{r.residual_order}): {r.passed}")

    # the substitution g = (X^2-1)/(5X^2-1) turns G_n into a multiple of U_n
    for n in (2, 5):
        print(f"\nU_{n} divides transformed G_{n}: {derive_U(n).divides(transformed_G(n))}")
    print(f"transformed G_2 == +-16 U_2: {transformed_G(2).equal_up_to_sign(16 * derive_U(2))}")

    rep = structure_checks(derive_G(3), 3, "g")
    print(f"G_3 symmetric: {rep.symmetric}, degree as expected: {rep.degree_ok}")


if __name__ == "__main__":
    main()
