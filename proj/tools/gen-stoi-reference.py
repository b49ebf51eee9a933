#!/usr/bin/env python3
"""Regenerates tests/data/stoi/*.wav and tests/stoi_reference.csv.

Clean signals are synthetic speech-like utterances (formant-filtered pulse
trains, fricative bursts and pauses). Each is degraded four ways; the
expected score comes from pystoi, an implementation independent of this
repository. Requires numpy, scipy and pystoi.
"""
import csv
import os
import sys

import numpy as np
from scipy.io import wavfile
from scipy.signal import butter, lfilter
from pystoi import stoi

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "tests")
DATA = os.path.join(ROOT, "data", "stoi")


def resonator(x, freq, bw, fs):
    r = np.exp(-np.pi * bw / fs)
    theta = 2 * np.pi * freq / fs
    a = [1.0, -2 * r * np.cos(theta), r * r]
    return lfilter([1.0 - r], a, x)


def talker(rng, fs, seconds, lead=0.3):
    n = int(seconds * fs)
    out = np.zeros(n)
    pos = int(lead * fs)
    while pos < n - int(0.4 * fs):
        for _ in range(rng.integers(1, 4)):  # syllables per word
            dur = int(rng.uniform(0.12, 0.28) * fs)
            if pos + dur >= n - int(0.3 * fs):
                break
            t = np.arange(dur) / fs
            if rng.random() < 0.8:
                f0 = rng.uniform(95, 220) * (1 + 0.1 * np.sin(2 * np.pi * 3 * t))
                phase = 2 * np.pi * np.cumsum(f0) / fs
                src = np.zeros(dur)
                for k in range(1, int(fs / 2 / 230)):
                    src += np.sin(k * phase) / k
                seg = src
                for f, bw in ((rng.uniform(300, 850), 90),
                              (rng.uniform(900, 2300), 120),
                              (rng.uniform(2400, 3300), 180)):
                    seg = seg + 0.6 * resonator(src, f, bw, fs)
            else:
                b, a = butter(4, min(0.95, 2500 * 2 / fs), btype="high")
                seg = lfilter(b, a, rng.standard_normal(dur)) * 0.3
            env = np.hanning(dur)
            out[pos:pos + dur] += seg * env
            pos += dur
        pos += int(rng.uniform(0.08, 0.35) * fs)  # pause between words
    return out


def normalise(x, peak):
    return x * (peak / np.max(np.abs(x)))


def mix(clean, noise, snr_db):
    ps = np.mean(clean ** 2)
    pn = np.mean(noise ** 2)
    return clean + noise * np.sqrt(ps / (pn * 10 ** (snr_db / 10)))


def pink(rng, n):
    white = rng.standard_normal(n)
    b = [0.049922035, -0.095993537, 0.050612699, -0.004408786]
    a = [1, -2.494956002, 2.017265875, -0.522189400]
    return lfilter(b, a, white)


def babble(rng, fs, seconds):
    return sum(normalise(talker(rng, fs, seconds, lead=0.0), 1.0)
               for _ in range(6))


def to_int16(x):
    return np.clip(np.round(x * 32768), -32768, 32767).astype(np.int16)


def main():
    os.makedirs(DATA, exist_ok=True)
    rng = np.random.default_rng(20240611)
    plans = [
        (10000, [("babble", -5), ("babble", 0), ("babble", 5), ("white", 0)]),
        (10000, [("babble", -10), ("white", -5), ("pink", 5), ("lowpass", 10)]),
        (10000, [("pink", -5), ("babble", 10), ("white", 10), ("lowpass", 0)]),
        (16000, [("babble", -5), ("babble", 5), ("pink", 0), ("white", 5)]),
        (16000, [("babble", 0), ("white", -10), ("pink", -10), ("lowpass", 5)]),
    ]
    rows = []
    for ci, (fs, degradations) in enumerate(plans):
        seconds = 2.6
        clean = normalise(talker(rng, fs, seconds), 0.5)
        clean_q = to_int16(clean)
        clean_name = f"clean{ci}.wav"
        wavfile.write(os.path.join(DATA, clean_name), fs, clean_q)
        x = clean_q / 32768.0
        for di, (kind, snr) in enumerate(degradations):
            n = len(clean)
            if kind == "babble":
                noise = babble(rng, fs, seconds)[:n]
            elif kind == "white":
                noise = rng.standard_normal(n)
            elif kind == "pink":
                noise = pink(rng, n)
            else:
                b, a = butter(6, 1500 * 2 / fs)
                noise = rng.standard_normal(n)
                x_lp = lfilter(b, a, x)
                deg = mix(x_lp, noise, snr)
            if kind != "lowpass":
                deg = mix(x, noise, snr)
            deg = normalise(deg, 0.9)
            deg_q = to_int16(deg)
            name = f"degraded{ci}_{di}_{kind}_{snr:+d}.wav"
            wavfile.write(os.path.join(DATA, name), fs, deg_q)
            y = deg_q / 32768.0
            rows.append((f"data/stoi/{clean_name}", f"data/stoi/{name}",
                         f"{stoi(x, y, fs):.6f}"))
    with open(os.path.join(ROOT, "stoi_reference.csv"), "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["clean_path", "degraded_path", "expected_score"])
        w.writerows(rows)
    print(f"wrote {len(rows)} reference pairs", file=sys.stderr)


if __name__ == "__main__":
    main()
