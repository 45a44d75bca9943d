"""Degrees and leading coefficients of the cleared chain, as polynomials in u."""
from pseudopairs import chain_audit, power_jet
from pseudopairs.conditions import s_poly

for n, m in ((2, 3), (2, 7), (4, 9)):
    audit = chain_audit(power_jet(n), power_jet(m), (n, m))
    d = audit["degrees"]
    print(f"(n, m) = ({n}, {m}),  s = {s_poly(n, m)}")
    print("  degrees: U", d["U"], " A'", d["Ap"], " E'", d["Ep"], " J'", d["Jp"])
    for e in audit["leading"]:
        print(f"  {e['name']:>3}: measured / predicted leading coefficient = {e['ratio']}")
    pw = audit["powers"]
    print("  u^75, u^74 coefficients match the closed formula:", pw["match_u75"], pw["match_u74"])
