"""End-to-end run on the 6-dimensional example: orbit, representation, reference comparison,
invariant operators, pullback identity and the theorem hypotheses.

    python scripts/pedersen_report.py > pedersen.yaml
"""

import itertools

from orbitkit import library, reports
from orbitkit.exact import ONE, ZERO, param
from orbitkit.exact.poly import MultiPoly
from orbitkit.kirillov import compare_with_reference, induced_drep, vergne_polarization, verify_drep_brackets
from orbitkit.orbits import orbit_cross_section
from orbitkit.quantization import find_invariant_ops, quantize_poly, restriction_data, verify_pullback
from orbitkit.theorems import check_theorem_main3


def main():
    a, b = param("a"), param("b")
    g = library.pedersen6()
    xi = [a, ZERO, ZERO, ZERO, ZERO, b]
    orbit = orbit_cross_section(g, xi)
    rep = induced_drep(g, vergne_polarization(g, xi), xi)
    y = MultiPoly.gens(orbit.y_names)
    printed_y6 = library.pedersen_printed_orbit_y6(y[0], y[1], y[2])
    cmp = compare_with_reference(rep, library.pedersen_printed_drep(), library.pedersen_scales())
    data = restriction_data(g, 5, xi, big=orbit)
    monomials = [e for e in itertools.product(range(4), repeat=4) if sum(e) <= 3]
    pulled = sum(verify_pullback(MultiPoly(4, {e: ONE}, orbit.y_names), rep, data).ok for e in monomials)
    invariant = find_invariant_ops(orbit, 1, 2)
    theorem = check_theorem_main3(library.pedersen_theorem_input())
    tree = {
        "orbit": orbit.relations(),
        "printed_y6": f"y6 = {printed_y6}",
        "printed_minus_computed_y6": str(printed_y6 - orbit.cross_section[6]),
        "operators": rep.lines(),
        "bracket_oracle": verify_drep_brackets(rep.operators, g).ok,
        "reference_differences": {f"X{j}": str(d) for j, d in cmp.residuals.items()},
        "quantized": {
            "y2*y4": str(quantize_poly(y[0] * y[2], rep, orbit)),
            "y3^2": str(quantize_poly(y[1] ** 2, rep, orbit)),
        },
        "invariant_ops_order1_degree2": [str(D) for D in invariant],
        "pullback_monomials_ok": f"{pulled}/{len(monomials)}",
        "theorem": theorem.as_dict(),
    }
    print(reports.dump(tree), end="")


if __name__ == "__main__":
    main()
