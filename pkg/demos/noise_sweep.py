"""Success rate of the N = 15, a = 2 algorithm under injected noise.

After every displayed gate each qubit suffers, with a given probability,
either a nonselective computational-basis measurement or a uniformly
random Pauli.  With noise on every qubit the success rate decays toward
the random-guessing baseline.  With the control qubit protected the
story changes: the order r = 4 is a power of two, so randomizing the
work register only demotes the pure algorithm to mixed-state efficiency
(Pauli noise), while basis measurements cannot disturb the basis-state
work register at all.
"""

from mixshor import InitialStateKind, build_instance
from mixshor.experiments import monte_carlo_sweep, random_baseline, success_probability_exact
from mixshor.noise import MEASUREMENT, PAULI
from mixshor.svgplot import write_line_plot

inst = build_instance(15, 2)
probs = [0.05 * i for i in range(11)]
runs = 400

print(f"N={inst.N}, a={inst.a}; {runs} runs per grid point")
print(f"exact success: pure {success_probability_exact(inst, InitialStateKind.PURE):.3f}, "
      f"mixed {success_probability_exact(inst, InitialStateKind.MIXED_FULL):.3f}, "
      f"random baseline {random_baseline(inst):.4f}\n")

series = {}
for label, kind, exclude in (
    ("pauli, all qubits", PAULI, False),
    ("pauli, control protected", PAULI, True),
    ("measurement, all qubits", MEASUREMENT, False),
    ("measurement, control protected", MEASUREMENT, True),
):
    rows = monte_carlo_sweep(
        inst, InitialStateKind.PURE, kind, probs, runs, exclude_control=exclude, seed=42
    )
    series[label] = (probs, [r.rate for r in rows])
    rates = " ".join(f"{r.rate:.2f}" for r in rows)
    print(f"{label:32s} {rates}")

write_line_plot(
    "noise_sweep.svg",
    series,
    xlabel="per-qubit noise probability per gate",
    ylabel="success rate",
    title="N=15, a=2 under injected noise",
)
print("\nwrote noise_sweep.svg")
