from enum import Enum, IntEnum


class Comparison(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class MonomialOrder(Enum):
    GREVLEX = 'grevlex'
    LEX = 'lex'

    @classmethod
    def choices(cls):
        return [(order.value, order.value) for order in cls]

    @staticmethod
    def from_string(order_str):
        """
        Parses an order name (value or enum name, any case) into a MonomialOrder.

        Args:
            order_str (str): e.g. 'grevlex', 'LEX'.

        Returns:
            MonomialOrder: The matching order.

        Raises:
            ValueError: If `order_str` names no supported order.
        """
        if isinstance(order_str, MonomialOrder):
            return order_str
        for order in MonomialOrder:
            if str(order_str).lower() in (order.value, order.name.lower()):
                return order
        raise ValueError(f"Invalid monomial order: {order_str}")

    def sort_key(self, exponents):
        """
        Key under which larger monomials compare greater.

        grevlex: total degree first, then the monomial with the smaller
        exponent in the last differing variable wins.
        lex: exponent vectors compared from the first variable.
        """
        if self is MonomialOrder.LEX:
            return exponents
        return (sum(exponents), tuple(-e for e in reversed(exponents)))
