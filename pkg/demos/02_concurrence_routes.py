"""Every concurrence route against the Wootters procedure.

The Wootters eigenvalue construction works for any two-qubit density
matrix.  The closed forms are shortcuts that only hold under symmetry:

  x_form           S_z conserved (the sparsity pattern of the pair RDM)
  correlation_form zero field (global spin-flip symmetry)
  energy_form      the regime-matching formula: isotropic from U alone,
                   anisotropic from U and G_zz, isotropic-with-field from
                   U, z and the magnetization

Wherever a shortcut applies it must agree with Wootters to ~1e-9; the
max_route_disagreement column is the library's master self-check.
"""

from heisenring import ModelSpec, run_sweep, temperature_grid

cases = [
    ("isotropic", ModelSpec.uniform(6, 1.0)),
    ("XY (delta=0)", ModelSpec.uniform(6, 1.0, 0.0)),
    ("easy-axis (delta=2)", ModelSpec.uniform(6, 1.0, 2.0)),
    ("isotropic + field B=1", ModelSpec.uniform(6, 1.0, 1.0, 1.0)),
    ("ferromagnet", ModelSpec.uniform(6, -1.0)),
]

temps = temperature_grid(0.1, 10.0, 9, "log")
for label, spec in cases:
    rows = run_sweep(spec, temps)
    print(f"=== {label} ===")
    print(f"{'T':>8} {'wootters':>10} {'x_form':>10} {'corr':>10} "
          f"{'energy':>10} {'spread':>9}")
    for row in rows:
        def cell(v):
            return "      --- " if v is None else f"{v:10.6f}"
        print(f"{row['T']:8.3f} {cell(row['C_wootters'])} {cell(row['C_x_form'])} "
              f"{cell(row['C_correlation'])} {cell(row['C_energy'])} "
              f"{row['max_route_disagreement']:9.1e}")
    worst = max(row["max_route_disagreement"] for row in rows)
    print(f"worst route disagreement: {worst:.2e}\n")
