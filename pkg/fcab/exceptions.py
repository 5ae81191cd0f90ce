# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
from typing import List, Tuple


class PreconditionError(ValueError):
    pass

class DomainError(PreconditionError):
    pass

class ParameterWindowError(PreconditionError):
    pass

class TraceError(RuntimeError):
    pass

class ConfigError(RuntimeError):
    def __init__(self, message: str, errors: List[Tuple[str, str]] = None) -> None:
        super().__init__(message)
        self.errors: List[Tuple[str, str]] = errors or []

    def __str__(self) -> str:
        if not self.errors:
            return super().__str__()
        details = '; '.join('{}: {}'.format(path, msg) for path, msg in self.errors)
        return '{} ({})'.format(super().__str__(), details)
