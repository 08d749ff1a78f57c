from dataclasses import dataclass

from django.conf import settings

from f4.utils.variants import F4Variant, RenewMode
from polynomials.utils.monomial_orders import MonomialOrder


@dataclass(frozen=True)
class VariantConfig:
    """
    Which F4 variant runs and how.

    s-f4 and ms-f4 take the S-polynomial Reduction path and need the field
    equations; only ms-f4 turns Middle-Solving on. fe-f4 may run without
    the field equations for ablations, which makes it plain F4.
    """
    mode: F4Variant = F4Variant.FE_F4
    order: MonomialOrder = MonomialOrder.GREVLEX
    adjoin_field_eqs: bool = True
    middle_solving: bool = False
    history_cap: int = 0
    renew_mode: RenewMode = RenewMode.RECOMPUTE
    cascade: bool = True
    check_invariants: bool = True

    def __post_init__(self):
        if self.mode.uses_s_polynomial_rows and not self.adjoin_field_eqs:
            raise ValueError(f"{self.mode.value} requires the field equations")
        if self.middle_solving != (self.mode is F4Variant.MS_F4):
            raise ValueError("Middle-Solving is enabled exactly for ms-f4")
        if self.history_cap < 0:
            raise ValueError("history_cap must be non-negative")

    @property
    def uses_s_polynomial_rows(self):
        return self.mode.uses_s_polynomial_rows

    @classmethod
    def for_variant(cls, mode, **overrides):
        """
        Build a config for `mode` with defaults from settings.GROEBNER_CONFIG.

        Overrides given as None fall back to the defaults; string values for
        order / renew_mode are parsed.
        """
        mode = F4Variant.from_string(mode)
        defaults = settings.GROEBNER_CONFIG
        values = {
            'order': defaults['DEFAULT_ORDER'],
            'adjoin_field_eqs': mode is not F4Variant.PLAIN_F4,
            'middle_solving': mode is F4Variant.MS_F4,
            'history_cap': defaults['HISTORY_CAP'],
            'renew_mode': defaults['RENEW_MODE'],
            'cascade': defaults['CASCADE_SOLVING'],
            'check_invariants': defaults['CHECK_INVARIANTS'],
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        values['order'] = MonomialOrder.from_string(values['order'])
        values['renew_mode'] = RenewMode.from_string(values['renew_mode'])
        return cls(mode=mode, **values)
