"""Kreiss constant versus power growth for a few nilpotent matrices."""
import numpy as np

from pseudopairs import CtParams, ct_build, kreiss_sanity, materialize

mats = {
    "shift S": np.eye(8, k=1),
    "2 S": 2 * np.eye(8, k=1),
    "C_1": materialize(ct_build(CtParams(1.0, 1.0, -0.5, 0.0, -0.5, 1.0))),
    "zero": np.zeros((10, 10)),
}
for name, a in mats.items():
    r = kreiss_sanity(a)
    print(f"{name:8s}  Kreiss {r['kreiss_estimate']:10.4f}  sup||A^k|| {r['sup_power_norm']:10.4f}"
          f"  (k = {r['sup_power_k']})  e N Kreiss {r['upper_bound']:10.2f}  ok {r['passed']}")
