"""Text format for generator files.

A file holds one element per line, after a ``degree N`` header.  Three line
forms are accepted, all 1-based:

    (5 6 7)(1 2)                          cycle notation, a permutation
    [7,1,1,1,2,3,4]                       image list
    classes {1,2,3,4}->1; {5}->2; ...     kernel classes with their images

Blank lines and ``#`` comments are ignored.  Image lists that happen to be
bijections come back as Permutation so group files may use either form.
"""

import re

from .elements import Permutation, Transformation
from .errors import InputFormatError


def parse_element(line: str, degree: int) -> Transformation:
    line = line.strip()
    if line.startswith("("):
        return _parse_cycles(line, degree)
    if line.startswith("["):
        return _promote(_parse_image_list(line, degree))
    if line.startswith("classes"):
        return _promote(_parse_classes(line, degree))
    raise InputFormatError(f"unrecognized element line: {line!r}")


def _promote(t: Transformation) -> Transformation:
    return Permutation(t.images) if t.is_permutation() else t


def _parse_cycles(line: str, degree: int) -> Permutation:
    if line == "()":
        return Permutation.identity(degree)
    body = line.replace(",", " ")
    if not re.fullmatch(r"\s*(\(\s*\d+(\s+\d+)*\s*\)\s*)+", body):
        raise InputFormatError(f"bad cycle notation: {line!r}")
    cycles = []
    for group in re.findall(r"\(([^()]*)\)", body):
        pts = [int(tok) for tok in group.split()]
        if any(p < 1 or p > degree for p in pts):
            raise InputFormatError(f"point out of range 1..{degree} in {line!r}")
        cycles.append(tuple(p - 1 for p in pts))
    try:
        return Permutation.from_cycles(degree, cycles)
    except ValueError as exc:
        raise InputFormatError(f"{exc} in {line!r}") from None


def _parse_image_list(line: str, degree: int) -> Transformation:
    body = line.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise InputFormatError(f"bad image list: {line!r}")
    toks = [t for t in re.split(r"[,\s]+", body[1:-1].strip()) if t]
    try:
        imgs = [int(t) for t in toks]
    except ValueError:
        raise InputFormatError(f"bad image list: {line!r}") from None
    if len(imgs) != degree:
        raise InputFormatError(
            f"image list has {len(imgs)} entries, expected {degree}: {line!r}")
    if any(v < 1 or v > degree for v in imgs):
        raise InputFormatError(f"image out of range 1..{degree}: {line!r}")
    return Transformation.from_one_based(imgs)


def _parse_classes(line: str, degree: int) -> Transformation:
    body = line[len("classes"):].strip()
    images = [None] * degree
    for chunk in body.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        m = re.fullmatch(r"\{([\d\s,]+)\}\s*->\s*(\d+)", chunk)
        if not m:
            raise InputFormatError(f"bad class chunk {chunk!r} in {line!r}")
        pts = [int(t) for t in re.split(r"[,\s]+", m.group(1).strip()) if t]
        value = int(m.group(2))
        if value < 1 or value > degree:
            raise InputFormatError(f"image {value} out of range in {line!r}")
        for p in pts:
            if p < 1 or p > degree:
                raise InputFormatError(f"point {p} out of range in {line!r}")
            if images[p - 1] is not None:
                raise InputFormatError(f"point {p} assigned twice in {line!r}")
            images[p - 1] = value - 1
    missing = [x + 1 for x in range(degree) if images[x] is None]
    if missing:
        raise InputFormatError(f"points {missing} not covered in {line!r}")
    return Transformation(images)


def parse_text(text: str):
    """Parse a whole generator file; returns (degree, list of elements)."""
    degree = None
    elements = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            m = re.fullmatch(r"degree\s+(\d+)", line)
            if not m:
                raise InputFormatError(
                    f"line {lineno}: expected 'degree N' header, got {line!r}")
            degree = int(m.group(1))
            if degree < 1:
                raise InputFormatError(f"line {lineno}: degree must be positive")
            continue
        try:
            elements.append(parse_element(line, degree))
        except InputFormatError as exc:
            raise InputFormatError(f"line {lineno}: {exc}") from None
    if degree is None:
        raise InputFormatError("missing 'degree N' header")
    return degree, elements


def parse_file(path):
    with open(path, encoding="utf-8") as fh:
        return parse_text(fh.read())


def render_element(t: Transformation) -> str:
    """Canonical file line for an element: cycles for permutations, else classes."""
    if isinstance(t, Permutation):
        return t.cycle_string()
    chunks = []
    for cls in t.kernel_classes():
        pts = ",".join(str(x + 1) for x in cls)
        chunks.append("{%s}->%d" % (pts, t.images[cls[0]] + 1))
    return "classes " + "; ".join(chunks)


def render_text(degree: int, elements, header_comment: str | None = None) -> str:
    lines = []
    if header_comment:
        lines.extend("# " + ln for ln in header_comment.splitlines())
    lines.append(f"degree {degree}")
    lines.extend(render_element(t) for t in elements)
    return "\n".join(lines) + "\n"
