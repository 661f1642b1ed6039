# Copyright (C) 2024 The two-zero workbench authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from typing import Optional


class WorkbenchError(Exception):
    """
    Base class for all errors raised by the workbench.

    Disagreements between closed-form identities and enumeration results are
    not errors; they are reported as record fields.
    """
    pass


class NotPrime(WorkbenchError, ValueError):
    """Field characteristic is not a prime."""
    pass


class SizeExceeded(WorkbenchError, ValueError):
    """Requested field is larger than the configured size cap."""

    def __init__(self, size: int, cap: int):
        super().__init__("Field of size {} exceeds the size cap of {} elements".format(size, cap))
        self.size = size
        self.cap = cap

    def __reduce__(self):
        return self.__class__, (self.size, self.cap)


class NoPrimitivePolynomial(WorkbenchError, RuntimeError):
    """No primitive polynomial found. Cannot happen for valid inputs."""
    pass


class DivisionByZero(WorkbenchError, ZeroDivisionError):
    """Inverse or multiplicative order of the zero element requested."""
    pass


class ConstraintViolated(WorkbenchError, ValueError):
    """A parameter tuple violates one of the family constraints."""

    def __init__(self, constraint: str, detail: Optional[str] = None):
        msg = "Constraint violated: {}".format(constraint)
        if detail:
            msg += " ({})".format(detail)
        super().__init__(msg)
        self.constraint = constraint
        self.detail = detail

    def __reduce__(self):
        return self.__class__, (self.constraint, self.detail)


class DegreeMismatch(WorkbenchError, ArithmeticError):
    """Check polynomial degree differs from 2k."""

    def __init__(self, degree: int, expected: int):
        super().__init__("Check polynomial has degree {}, expected {}".format(degree, expected))
        self.degree = degree
        self.expected = expected

    def __reduce__(self):
        return self.__class__, (self.degree, self.expected)


class InternalError(WorkbenchError, RuntimeError):
    """Internal consistency failure (indicates a bug, not a property of the code family)."""
    pass


class BudgetExceeded(WorkbenchError, RuntimeError):
    """Exhaustive enumeration would exceed the evaluation budget."""

    def __init__(self, cost: int, budget: int):
        super().__init__("Enumeration needs {} coordinate evaluations, budget is {} "
                         "(raise it with --budget or bypass with --force)".format(cost, budget))
        self.cost = cost
        self.budget = budget

    def __reduce__(self):
        return self.__class__, (self.cost, self.budget)


class NonIntegerCount(WorkbenchError, ArithmeticError):
    """MacWilliams transform produced a non-integer count."""
    pass


class NotCoprime(WorkbenchError, ValueError):
    """Arguments that must be coprime are not."""
    pass


class NonIntegralTheta(WorkbenchError, ValueError):
    """Weight formula evaluated with a non-integral exponent."""
    pass


class SinkError(WorkbenchError, IOError):
    """Writing a report record failed."""
    pass
