"""Compare the compiled kernels with the numpy/scipy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import timeit

import numpy as np

from d3pred._kernels import _fallback

try:
    from d3pred._kernels import _ckernels
except ImportError:
    _ckernels = None
from d3pred.scenegen import SceneConfig, random_scene
from d3pred.scenegen.scene import _ray_dirs


def _raycast_inputs(size, seed=0):
    scene = random_scene(np.random.default_rng(seed), SceneConfig(focal=size), size)
    spheres, boxes, planes, _, _ = scene.packed()
    dirs = _ray_dirs(size, size, scene.camera.focal, 0.5, 0.5)
    return dirs, spheres, boxes, planes, scene.camera.z_far


def _mask_inputs(size, seed=0):
    rng = np.random.default_rng(seed)
    return (rng.random((size, size)) < 0.55,)


def bench(fn, args, repeat):
    number = 3
    best = min(timeit.repeat(lambda: fn(*args), number=number, repeat=repeat)) / number
    return best * 1e3


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the fallback is available")
    rows = []
    for size in (64, 128, 256):
        for name, make in (("raycast", _raycast_inputs), ("largest_component", _mask_inputs)):
            inputs = make(size)
            py = bench(getattr(_fallback, name), inputs, args.repeat)
            c = bench(getattr(_ckernels, name), inputs, args.repeat) if _ckernels else float("nan")
            rows.append((name, f"{size}x{size}", py, c, py / c))
    print(f"{'kernel':<18} {'size':>8} {'numpy ms':>9} {'cython ms':>10} {'speedup':>8}")
    for name, size, py, c, sp in rows:
        print(f"{name:<18} {size:>8} {py:9.3f} {c:10.3f} {sp:8.2f}")


if __name__ == "__main__":
    main()
