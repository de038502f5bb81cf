"""Loading of the bundled coefficient tables with checksum verification."""
import csv
import hashlib
import io
from importlib import resources

# sha256 of each asset as shipped; edits to a table must update this map
CHECKSUMS = {
    "p838_coefficients.csv": "c4faffbedefbf10ca8ede464bea77e4e63fc3f6e07e7924355bcd81cf01cb240",
    "p676_oxygen_lines.csv": "4b7ad8255fa225527c59b9162d97e6ddfef3dd51f4aef40fa6417456b02c94c9",
    "p676_water_lines.csv": "0cc55a36ad1bd37cb18ff5141b0e0201fae000a1648347eb9e48bd50e4b4acf8",
}


class AssetChecksumError(RuntimeError):
    pass


def read_bytes(name):
    return resources.files(__package__).joinpath("data").joinpath(name).read_bytes()


def load_table(name, raw=None, expected=None):
    """Parse a bundled CSV asset.

    Returns ``(comments, rows)`` where ``comments`` are the ``#`` header lines
    (without the marker) and ``rows`` is a list of dicts keyed by column name.
    ``raw`` overrides the bundled bytes, which is how tests feed corrupted data.
    """
    if raw is None:
        raw = read_bytes(name)
    if expected is None:
        expected = CHECKSUMS[name]
    digest = hashlib.sha256(raw).hexdigest()
    if digest != expected:
        raise AssetChecksumError(
            f"{name}: checksum mismatch (expected {expected[:12]}..., got {digest[:12]}...)"
        )
    text = raw.decode("utf-8")
    comments = []
    body = []
    for line in text.splitlines():
        if line.startswith("#"):
            comments.append(line[1:].strip())
        elif line.strip():
            body.append(line)
    rows = list(csv.DictReader(io.StringIO("\n".join(body))))
    return comments, rows
