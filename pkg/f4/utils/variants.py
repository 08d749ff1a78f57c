from enum import Enum


class F4Variant(Enum):
    PLAIN_F4 = 'f4'
    FE_F4 = 'fe-f4'
    S_F4 = 's-f4'
    MS_F4 = 'ms-f4'

    @classmethod
    def choices(cls):
        return [(variant.value, variant.value) for variant in cls]

    @staticmethod
    def from_string(variant_str):
        """
        Parses a variant by value ('fe-f4'), enum name ('FE_F4') or the
        underscore spelling ('fe_f4', 'plain_f4').

        Raises:
            ValueError: If no variant matches.
        """
        if isinstance(variant_str, F4Variant):
            return variant_str
        wanted = str(variant_str).strip().lower()
        for variant in F4Variant:
            if wanted in (variant.value, variant.name.lower(), variant.value.replace('-', '_')):
                return variant
        raise ValueError(f"Invalid F4 variant: {variant_str}")

    @property
    def uses_s_polynomial_rows(self):
        return self in (F4Variant.S_F4, F4Variant.MS_F4)


class RenewMode(Enum):
    RECOMPUTE = 'recompute'
    REBUILD = 'rebuild'

    @classmethod
    def choices(cls):
        return [(mode.value, mode.value) for mode in cls]

    @staticmethod
    def from_string(mode_str):
        if isinstance(mode_str, RenewMode):
            return mode_str
        for mode in RenewMode:
            if mode_str in (mode.value, mode.name):
                return mode
        raise ValueError(f"Invalid renew mode: {mode_str}")


class RowTag(Enum):
    PAIR_PRODUCT = 'pair-product'
    S_POLYNOMIAL = 's-polynomial'
    REDUCER = 'reducer'
