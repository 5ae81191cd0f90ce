# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import json
import os
import tempfile

from contextlib import contextmanager
from pathlib import Path
from typing import IO, Any, Iterator, Union


@contextmanager
def atomic_writer(path: Union[str, Path]) -> Iterator[IO[str]]:
    """
    Open a temporary file next to `path` for writing; it replaces `path` only when the
    block completes, so a failed run never leaves a partial file.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(prefix='.' + path.name + '.', suffix='.tmp', dir=str(path.parent))
    try:
        with os.fdopen(fd, 'w', newline='') as stream:
            yield stream
        os.replace(tmp_path, str(path))
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise


def write_json(path: Union[str, Path], payload: Any) -> None:
    with atomic_writer(path) as stream:
        json.dump(payload, stream, indent=2)
        stream.write('\n')
