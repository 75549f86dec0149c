"""Trade entanglement for mixedness by degrading the control qubit.

The control is prepared (and re-prepared after every measurement) in
(1-eps)|psi><psi| + eps|psi_perp><psi_perp| instead of the pure |+>.
Sweeping eps from 0 to 1/2 shows the whole-run average entanglement and
the exact success probability falling together.  For the pure work
register the entanglement survives all the way to eps = 1/2; for the
maximally mixed register it vanishes well before the algorithm turns
into random guessing, near eps = 0.396 for N = 15.
"""

from mixshor import InitialStateKind, build_instance
from mixshor.experiments import find_entanglement_crossing, mix_sweep, random_baseline
from mixshor.svgplot import write_line_plot

inst = build_instance(15, 2)
epsilons = [0.05 * i for i in range(11)]

print(f"N={inst.N}, a={inst.a}; random baseline {random_baseline(inst):.4f}\n")
print(f"{'eps':>5} {'pure: success':>14} {'E':>8} {'mixed: success':>15} {'E':>8}")

series = {}
rows_by_kind = {}
for kind in (InitialStateKind.PURE, InitialStateKind.MIXED_FULL):
    rows_by_kind[kind] = mix_sweep(inst, kind, epsilons)

for pure_row, mixed_row in zip(rows_by_kind[InitialStateKind.PURE],
                               rows_by_kind[InitialStateKind.MIXED_FULL]):
    print(
        f"{pure_row.epsilon:>5.2f} {pure_row.success_prob:>14.4f} {pure_row.avg_entanglement:>8.4f}"
        f" {mixed_row.success_prob:>15.4f} {mixed_row.avg_entanglement:>8.4f}"
    )

crossing = find_entanglement_crossing(inst, InitialStateKind.MIXED_FULL)
print(f"\nmixed-register entanglement vanishes at eps = {crossing:.4f}")

series["pure success"] = (epsilons, [r.success_prob for r in rows_by_kind[InitialStateKind.PURE]])
series["pure E"] = (epsilons, [r.avg_entanglement for r in rows_by_kind[InitialStateKind.PURE]])
series["mixed success"] = (epsilons, [r.success_prob for r in rows_by_kind[InitialStateKind.MIXED_FULL]])
series["mixed E"] = (epsilons, [r.avg_entanglement for r in rows_by_kind[InitialStateKind.MIXED_FULL]])
write_line_plot(
    "control_mixing.svg",
    series,
    xlabel="mixing strength eps",
    ylabel="success probability / avg entanglement",
    title="N=15, a=2 control-qubit mixing",
)
print("wrote control_mixing.svg")
