"""Physical constants and unit conventions.

Everything inside the library is strict SI: Pa, K, kg/m3, m3/kg, J/kg,
J/(kg K).  The command-line layer converts to and from MPa and kJ/kg at
the boundary; no other module does unit conversion.
"""

from .errors import ValidationError

#: Universal gas constant, J/(mol K) (CODATA 2018).
R_UNIVERSAL = 8.314462618

#: Reference temperature for energy and entropy anchors, K.
T_REF = 298.15

#: Reference pressure for the entropy anchor, Pa.
P_REF = 101325.0


def universal_constants():
    """Return ``(R_universal, T_ref, P_ref)`` in SI units."""
    return (R_UNIVERSAL, T_REF, P_REF)


def molar_mass(R):
    """Molar mass in kg/mol implied by a specific gas constant R in J/(kg K)."""
    if not R > 0.0:
        raise ValidationError(f"specific gas constant must be positive, got {R!r}")
    return R_UNIVERSAL / R


def specific_gas_constant(molar_mass_kg):
    """Specific gas constant in J/(kg K) for a molar mass in kg/mol."""
    if not molar_mass_kg > 0.0:
        raise ValidationError(f"molar mass must be positive, got {molar_mass_kg!r}")
    return R_UNIVERSAL / molar_mass_kg
