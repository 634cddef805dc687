#!/usr/bin/env python3
# Copyright (c) 2026 The ttscorpus Authors
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
"""Writes the bundled toy corpus under data/toy.

Everything is derived from a fixed seed, so re-running reproduces the
checked-in files byte for byte.

  python3 tools/make_toy_data.py data/toy
"""

import math
import os
import random
import struct
import sys

SEED = 20260101

# Common Hindi words plus a few that carry rare phones (ny, ng, rq, jh, txh,
# dxh, nukta consonants) so the weak-phone pass has something to do.
COMMON = (
    "भारत देश हम लोग पानी घर किताब बच्चे स्कूल जाते हैं है में का की के और एक "
    "बहुत सुंदर नदी गाँव शहर आज कल मौसम अच्छा खाना दोस्त परिवार सूरज चाँद तारे "
    "आसमान हवा पेड़ फूल रंग संगीत ज्ञान विद्यालय प्रश्न उत्तर क्षेत्र श्रम कृषि "
    "इतिहास उद्योग नमस्ते धन्यवाद समय रात दिन सड़क मेहनत सपना किसान मंदिर "
    "रास्ता पुस्तक शिक्षक बारिश हरा नीला पीला लाल सफ़ेद गाड़ी रेल यात्रा"
).split()
RARE = "चञ्चल अङ्ग ऋतु झील ठंड ढोल बाज़ार ख़ुशी फ़िल्म ऐतिहासिक औषधि ईश्वर ऊँचा".split()
VERBS = "है हैं था थे होगा चलते गाते पढ़ते देखते सुनते".split()

SILENCE_PAD = 0.3


def count_aksharas(word):
    """Akshara count for the simple Devanagari used here: every consonant or
    independent vowel starts one, every virama glues two together."""
    n = 0
    for ch in word:
        cp = ord(ch)
        if 0x0904 <= cp <= 0x0914 or 0x0915 <= cp <= 0x0939 or 0x0958 <= cp <= 0x095F:
            n += 1
        elif cp == 0x094D:
            n -= 1
    return n


def sentence_syllables(text):
    return sum(count_aksharas(w.strip("।,")) for w in text.split())


def make_sentence(rng, n_words, rare_prob=0.08):
    words = []
    for _ in range(n_words - 1):
        pool = RARE if rng.random() < rare_prob else COMMON
        words.append(rng.choice(pool))
    words.append(rng.choice(VERBS))
    if n_words > 6 and rng.random() < 0.3:
        words[n_words // 2] += ","
    return " ".join(words) + "।"


def corpus_lines(rng):
    lines = []
    for i in range(1, 201):
        sid = "hi%04d" % i
        if i % 40 == 0:
            n = rng.randint(2, 4)  # too short for selection
        elif i % 45 == 0:
            n = rng.randint(17, 20)  # too long
        else:
            n = rng.randint(5, 15)
        text = make_sentence(rng, n)
        if i % 50 == 7:
            text = text[:-1] + " 2024 में।"  # digits: needs normalization
        if i % 50 == 13:
            text = "आज TV पर " + text  # Latin letters: strict reject
        if i % 50 == 21:
            text = text[:-1] + "!"  # punctuation for curation
        if i % 100 == 33:
            text = text.replace(" ", " ॰ ", 1)  # in-block but unmapped
        lines.append("%s\t%s" % (sid, text))
    return lines


def voiced(rng_phase, seconds, rate, f0, amp=0.3):
    """Harmonic tone with a slow syllable-like envelope."""
    n = int(round(seconds * rate))
    out = []
    for i in range(n):
        t = i / rate
        env = 0.6 + 0.4 * math.sin(2 * math.pi * 4.0 * t + rng_phase) ** 2
        f = f0 * (1.0 + 0.02 * math.sin(2 * math.pi * 5.0 * t))
        s = sum(math.sin(2 * math.pi * f * h * t) / h for h in (1, 2, 3, 4))
        out.append(amp * env * s / 2.1)
    return out


def silence(seconds, rate):
    return [0.0] * int(round(seconds * rate))


def write_wav(path, samples, rate):
    data = b"".join(
        struct.pack("<h", max(-32768, min(32767, int(round(v * 32768)))))
        for v in samples)
    header = b"RIFF" + struct.pack("<I", 36 + len(data)) + b"WAVE"
    header += b"fmt " + struct.pack("<IHHIIHH", 16, 1, 1, rate, rate * 2, 2, 16)
    header += b"data" + struct.pack("<I", len(data))
    with open(path, "wb") as f:
        f.write(header + data)


def utterance(speech_seconds, rate, f0, phase, gap=None):
    x = silence(SILENCE_PAD, rate)
    if gap is None:
        x += voiced(phase, speech_seconds, rate, f0)
    else:
        half = speech_seconds / 2
        x += voiced(phase, half, rate, f0) + silence(gap, rate)
        x += voiced(phase, half, rate, f0)
    return x + silence(SILENCE_PAD, rate)


def main(out_dir):
    rng = random.Random(SEED)
    os.makedirs(os.path.join(out_dir, "wav"), exist_ok=True)
    os.makedirs(os.path.join(out_dir, "syn"), exist_ok=True)

    lines = corpus_lines(rng)
    with open(os.path.join(out_dir, "corpus.txt"), "w", encoding="utf-8") as f:
        f.write("\n".join(lines) + "\n")

    # (utt, transcript, syllables/s, sample rate, internal gap)
    texts = [l.split("\t")[1] for l in lines]
    plain = [t for t in texts if not any(c in t for c in "0123456789TV!॰")]
    plan = [
        ("utt01", plain[0], 7.0, 48000, None),
        ("utt02", plain[1], 6.5, 48000, 0.3),
        ("utt03", plain[2], 9.5, 48000, None),  # too fast: warn
        ("utt04", plain[3], 7.0, 44100, None),  # wrong rate: strict fail
        ("utt05", plain[4], 7.5, 48000, None),
    ]
    manifest = []
    for i, (utt, text, sps, rate, gap) in enumerate(plan):
        syl = sentence_syllables(text)
        x = utterance(syl / sps, rate, 110.0 + 15 * i, 0.7 * i, gap)
        write_wav(os.path.join(out_dir, "wav", utt + ".wav"), x, rate)
        manifest.append("%s\twav/%s.wav\t%s" % (utt, utt, text))
    with open(os.path.join(out_dir, "manifest.tsv"), "w", encoding="utf-8") as f:
        f.write("\n".join(manifest) + "\n")

    # "Synthesized" versions: slightly faster and lower, same envelope.
    for i, utt in enumerate(("utt01", "utt02")):
        _, text, sps, _, gap = plan[i]
        syl = sentence_syllables(text)
        x = utterance(syl / (sps * 1.1), 48000, 104.0 + 15 * i, 0.7 * i, gap)
        write_wav(os.path.join(out_dir, "syn", utt + ".wav"), x, 48000)
    pairs = [
        "wav/utt01.wav\twav/utt01.wav\tcopy",
        "wav/utt02.wav\twav/utt02.wav\tcopy",
        "wav/utt01.wav\tsyn/utt01.wav\tsysA",
        "wav/utt02.wav\tsyn/utt02.wav\tsysA",
    ]
    with open(os.path.join(out_dir, "pairs.tsv"), "w", encoding="utf-8") as f:
        f.write("\n".join(pairs) + "\n")

    # Ten evaluators, eight items per condition. sysB is rated a bit above
    # its ground truth by most evaluators.
    rows = ["evaluator,system,item,condition,score"]
    for e in range(1, 11):
        for system, bias in (("sysA", -0.8), ("sysB", 0.3)):
            for cond in ("gt", "syn"):
                for item in range(1, 9):
                    base = 4.3 + (bias if cond == "syn" else 0.0)
                    score = min(5, max(1, int(round(base + rng.gauss(0, 0.6)))))
                    rows.append("e%02d,%s,i%02d,%s,%d" % (e, system, item, cond, score))
    with open(os.path.join(out_dir, "ratings.csv"), "w", encoding="utf-8") as f:
        f.write("\n".join(rows) + "\n")

    with open(os.path.join(out_dir, "lexicon.tsv"), "w", encoding="utf-8") as f:
        f.write("2024\tदो हज़ार चौबीस\nTV\tटीवी\n")
    with open(os.path.join(out_dir, "keywords.txt"), "w", encoding="utf-8") as f:
        f.write("# flagged for human review\nहिंसा\nयुद्ध\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/toy")
