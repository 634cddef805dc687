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
"""Generates ttscorpus language configs for the ISCII-aligned Brahmic blocks.

The Unicode Brahmic blocks share one layout (offset 0x15 is KA in every
block), so a single offset -> phone table covers all of them. Only
codepoints that are assigned in the given block are written out.

  python3 tools/make_language_config.py data/configs
"""

import os
import sys
import unicodedata

VOWELS = {
    0x05: "a", 0x06: "aa", 0x07: "i", 0x08: "ii", 0x09: "u", 0x0A: "uu",
    0x0B: "rq", 0x0C: "lq", 0x0D: "ae", 0x0E: "e", 0x0F: "ee", 0x10: "ai",
    0x11: "ax", 0x12: "o", 0x13: "oo", 0x14: "au", 0x60: "rqq", 0x61: "lqq",
}
VOWEL_SIGNS = {
    0x3E: "aa", 0x3F: "i", 0x40: "ii", 0x41: "u", 0x42: "uu", 0x43: "rq",
    0x44: "rqq", 0x45: "ae", 0x46: "e", 0x47: "ee", 0x48: "ai", 0x49: "ax",
    0x4A: "o", 0x4B: "oo", 0x4C: "au", 0x62: "lq", 0x63: "lqq",
}
CONSONANTS = {
    0x15: "k", 0x16: "kh", 0x17: "g", 0x18: "gh", 0x19: "ng", 0x1A: "c",
    0x1B: "ch", 0x1C: "j", 0x1D: "jh", 0x1E: "ny", 0x1F: "tx", 0x20: "txh",
    0x21: "dx", 0x22: "dxh", 0x23: "nx", 0x24: "t", 0x25: "th", 0x26: "d",
    0x27: "dh", 0x28: "n", 0x29: "nnx", 0x2A: "p", 0x2B: "ph", 0x2C: "b",
    0x2D: "bh", 0x2E: "m", 0x2F: "y", 0x30: "r", 0x31: "rx", 0x32: "l",
    0x33: "lx", 0x34: "zh", 0x35: "v", 0x36: "sh", 0x37: "sx", 0x38: "s",
    0x39: "h",
}
MARKS = {0x01: "cnd", 0x02: "anu", 0x03: "vis"}
NUKTA_FORMS = {0x15: "q", 0x16: "khx", 0x17: "gx", 0x1C: "z", 0x21: "dxx",
               0x22: "dxhx", 0x2B: "f", 0x2F: "yx"}

LANGUAGES = [
    # file, id, block base, schwa deletion, inherent vowel, extra consonants
    ("hindi.cfg", "hi", 0x0900, True, "a", {}),
    ("bengali.cfg", "bn", 0x0980, True, "ox",
     {0x09CE: "t", 0x09DC: "dxx", 0x09DD: "dxhx", 0x09DF: "yx"}),
    ("tamil.cfg", "ta", 0x0B80, False, "a", {}),
    ("telugu.cfg", "te", 0x0C00, False, "a", {}),
    ("kannada.cfg", "kn", 0x0C80, False, "a", {}),
]


def assigned(cp):
    return unicodedata.name(chr(cp), None) is not None


def line(cp, label):
    return f"U+{cp:04X} = {label}    # {chr(cp) if not unicodedata.combining(chr(cp)) else chr(0x25CC) + chr(cp)}"


def render(lang_id, base, schwa, inherent, extra):
    cons, signs, vowels, marks = [], [], [], []
    inventory = {inherent}
    for off, label in sorted(CONSONANTS.items()):
        if assigned(base + off):
            cons.append(line(base + off, label))
            inventory.add(label)
    if base == 0x0900:
        for off, label in sorted(NUKTA_FORMS.items()):
            cons.append(line(0x0958 + list(NUKTA_FORMS).index(off), label))
            inventory.add(label)
    for cp, label in sorted(extra.items()):
        cons.append(line(cp, label))
        inventory.add(label)
    for off, label in sorted(VOWEL_SIGNS.items()):
        name = unicodedata.name(chr(base + off), "")
        if "VOWEL SIGN" in name:
            signs.append(line(base + off, label))
            inventory.add(label)
    for off, label in sorted(VOWELS.items()):
        name = unicodedata.name(chr(base + off), "")
        if "LETTER" in name:
            vowels.append(line(base + off, label))
            inventory.add(label)
    for off, label in sorted(MARKS.items()):
        if assigned(base + off):
            marks.append(line(base + off, label))
            inventory.add(label)

    nukta = base + 0x3C
    out = [
        f"# {unicodedata.name(chr(base + 0x15)).split()[0].title()} script "
        f"configuration, generated by tools/make_language_config.py",
        f"language_id = {lang_id}",
        f"script_block = U+{base:04X}..U+{base + 0x7F:04X}",
        f"virama = U+{base + 0x4D:04X}",
    ]
    if assigned(nukta):
        out.append(f"nukta = U+{nukta:04X}")
    out += [
        f"inherent_vowel = {inherent}",
        f"schwa_deletion = {'true' if schwa else 'false'}",
        "full_stop_marks = U+0964 U+0965",
        f"digit_range = U+{base + 0x66:04X}..U+{base + 0x6F:04X}",
        "phones = " + " ".join(sorted(inventory)),
        "",
        "[consonants]",
        *cons,
        "",
        "[vowel_signs]",
        *signs,
        "",
        "[independent_vowels]",
        *vowels,
        "",
        "[nasalization_marks]",
        *marks,
        "",
    ]
    return "\n".join(out)


def main(argv):
    out_dir = argv[1] if len(argv) > 1 else "data/configs"
    os.makedirs(out_dir, exist_ok=True)
    for fname, lang_id, base, schwa, inherent, extra in LANGUAGES:
        with open(os.path.join(out_dir, fname), "w", encoding="utf-8") as f:
            f.write(render(lang_id, base, schwa, inherent, extra))


if __name__ == "__main__":
    main(sys.argv)
