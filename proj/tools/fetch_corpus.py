#!/usr/bin/env python3
"""Fetch the benchmark corpus into a directory.

Sources are package registries, so the script works behind a package mirror:
  lena.ppm     npm package "lena" (512x512 RGB, base64 in lena.js)
  baboon.png   npm package "baboon-image"
  *.png        color images shipped in the "sporco" wheel
  astronaut.png, coffee.png   scikit-image sample data, if installed

Images already present are kept. Missing tools or network only produce
warnings; the exit status is 0 unless the destination cannot be written.
Drop a "peppers.png" (or .ppm) into the directory by hand to enable the
Peppers reference comparison.
"""

import argparse
import base64
import io
import re
import shutil
import subprocess
import sys
import tarfile
import tempfile
import zipfile
from pathlib import Path

SPORCO_IMAGES = ("kodim23.png", "monarch.png", "sail.png", "tulips.png")


def warn(msg):
    print(f"fetch_corpus: warning: {msg}", file=sys.stderr)


def write_ppm(path, width, height, rgb):
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_bytes(b"P6\n%d %d\n255\n" % (width, height) + rgb)
    tmp.replace(path)


def npm_pack(name, workdir):
    if shutil.which("npm") is None:
        raise RuntimeError("npm not found")
    out = subprocess.run(["npm", "pack", name, "--silent"], cwd=workdir, check=True,
                         capture_output=True, text=True, timeout=300)
    return tarfile.open(Path(workdir) / out.stdout.strip().splitlines()[-1])


def fetch_lena(dest, workdir):
    target = dest / "lena.ppm"
    if target.exists():
        return
    with npm_pack("lena", workdir) as tar:
        source = tar.extractfile("package/lena.js").read().decode()
    payload = re.search(r"base64decode\(\s*'([^']*)'", source).group(1)
    data = base64.b64decode(payload)
    if len(data) != 512 * 512 * 3:
        raise RuntimeError(f"unexpected lena payload size {len(data)}")
    # The ndarray is stored column-major (x outermost); transpose to rows.
    rgb = bytearray(len(data))
    for y in range(512):
        for x in range(512):
            src = (x * 512 + y) * 3
            dst = (y * 512 + x) * 3
            rgb[dst:dst + 3] = data[src:src + 3]
    write_ppm(target, 512, 512, bytes(rgb))


def fetch_baboon(dest, workdir):
    target = dest / "baboon.png"
    if target.exists():
        return
    with npm_pack("baboon-image", workdir) as tar:
        target.write_bytes(tar.extractfile("package/baboon.png").read())


def fetch_sporco(dest, workdir):
    missing = [n for n in SPORCO_IMAGES if not (dest / n).exists()]
    if not missing:
        return
    subprocess.run([sys.executable, "-m", "pip", "download", "--no-deps", "--quiet",
                    "sporco", "-d", str(workdir)], check=True, timeout=600)
    wheel = next(Path(workdir).glob("sporco-*.whl"))
    with zipfile.ZipFile(wheel) as z:
        for name in missing:
            (dest / name).write_bytes(z.read(f"sporco/data/{name}"))


def fetch_skimage(dest):
    try:
        from skimage import data
        from PIL import Image
    except ImportError as e:
        raise RuntimeError(f"scikit-image or Pillow unavailable ({e})")
    for name in ("astronaut", "coffee"):
        target = dest / f"{name}.png"
        if not target.exists():
            buf = io.BytesIO()
            Image.fromarray(getattr(data, name)()).save(buf, format="PNG")
            target.write_bytes(buf.getvalue())


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dest", default="corpus", type=Path)
    args = parser.parse_args()
    args.dest.mkdir(parents=True, exist_ok=True)

    with tempfile.TemporaryDirectory() as work:
        steps = [("lena", lambda: fetch_lena(args.dest, work)),
                 ("baboon", lambda: fetch_baboon(args.dest, work)),
                 ("sporco", lambda: fetch_sporco(args.dest, work)),
                 ("scikit-image", lambda: fetch_skimage(args.dest))]
        for label, step in steps:
            try:
                step()
            except Exception as e:  # noqa: BLE001
                warn(f"{label}: {e}")

    images = sorted(p.name for p in args.dest.iterdir() if p.suffix in (".png", ".ppm", ".pgm"))
    print(f"{args.dest}: {len(images)} images: {' '.join(images)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
