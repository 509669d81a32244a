from fractions import Fraction

from rpbis.exceptions import (DuplicateTransitionError, NegativeProbError,
                              ReservedStateError, SumNotOneError,
                              UnknownStateError)

# Name of the state with no transitions used by the text format
NIL_STATE = "nil"


class model_base:

    @staticmethod
    def _check_pairs(pairs):
        """
        Generic function to check the (state, probability) pairs of a distribution.
        """
        # Ensure that the distribution is not empty
        if len(pairs) == 0:
            raise SumNotOneError("a distribution needs at least one entry")

        # Check that every probability is non-negative
        for state, prob in pairs:
            if prob < 0:
                raise NegativeProbError(
                    f"negative probability {prob} for state {state!r}")

        return pairs

    @staticmethod
    def _check_total(total: Fraction, context: str = "distribution"):
        """
        Generic function to check that a distribution sums to exactly one.
        """
        if total != 1:
            raise SumNotOneError(f"{context} sums to {total}, not 1")
        return total

    @staticmethod
    def _check_state(state, states):
        """
        Generic function to check that a state belongs to a system.
        """
        if state not in states:
            raise UnknownStateError(f"unknown state {state!r}")
        return state

    @staticmethod
    def _check_not_reserved(state):
        """
        Generic function to check that transitions do not leave the reserved nil state.
        """
        if state == NIL_STATE:
            raise ReservedStateError(
                f"{NIL_STATE!r} is reserved for the state without transitions")
        return state

    @staticmethod
    def _check_deterministic(key, known, dist):
        """
        Generic function to check reactive determinism of a (state, action) pair.
        """
        if key in known and known[key] != dist:
            state, action = key
            raise DuplicateTransitionError(
                f"state {state!r} has two different {action!r}-transitions")
        return dist
