#!/usr/bin/env python3
# Copyright 2026 The ets Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Independent oracle for frozen test values. Not used by the build.
import hashlib

def h(b): return b.hex()

print("sha256('')   ", hashlib.sha256(b"").hexdigest())
print("sha256(abc)  ", hashlib.sha256(b"abc").hexdigest())
m3 = b"a" * 150
print("sha256(a*150)", hashlib.sha256(m3).hexdigest())
print("sha512('')   ", hashlib.sha512(b"").hexdigest())
print("sha512(abc)  ", hashlib.sha512(b"abc").hexdigest())
m3b = b"a" * 300
print("sha512(a*300)", hashlib.sha512(m3b).hexdigest())
print("blake2b(abc) ", hashlib.blake2b(b"abc").hexdigest())
print("blake2b('')  ", hashlib.blake2b(b"").hexdigest())

# ---- naive encoder written from the written rules ----
def encode(c, d, mav, ad, m):
    frags = []
    if m:
        for i in range(0, len(m), c):
            frags.append(m[i:i+c])
    r = len(m) % c
    padded = bool(m) and r != 0
    regions = []  # (ad_region_size, payload_region bytes or None)
    regions.append((d, None))
    for i, f in enumerate(frags):
        last = i == len(frags) - 1
        if last and padded:
            s = (r // mav + 1) * mav
            pr = f + b"\0" * (s - r - 1) + bytes([len(m) % 256])
        else:
            pr = f
        regions.append((d - len(pr), pr))
    cap = sum(a for a, _ in regions)
    while cap < len(ad):
        regions.append((d, None)); cap += d
    ad_padded = len(ad) < cap
    stream = ad + (b"\x80" + b"\0" * (cap - len(ad) - 1) if ad_padded else b"")
    blocks = []; pos = 0
    for a, pr in regions:
        blocks.append(stream[pos:pos+a] + (pr or b"")); pos += a
    n = len(blocks); j = 1 + len(frags) if m else 0
    tw = [0] * n
    if not m: tw[0] = 1
    else:
        if j < n: tw[j-1] = 1
        if padded: tw[n-1] = 1
    return blocks, tw, 1 if ad_padded else 0, j

for (c, d, mav, ad, m) in [
    (1, 2, 1, bytes(range(1, 9)), b""),
    (1, 2, 1, b"", b"ABC"),
    (4, 8, 2, bytes(range(0xa0, 0xaa)), bytes(range(0xb0, 0xb5))),
    (4, 8, 2, b"", b""),
]:
    blocks, tw, om, j = encode(c, d, mav, ad, m)
    print("encode", c, d, mav, h(ad), h(m), [(h(b), t) for b, t in zip(blocks, tw)], "omega", om)

# ---- engine on the toy backend ----
def toy(block, t, chain):
    return bytes((chain[i] + block[i] + block[i+4] + t * 0xa5 + i) % 256 for i in range(4))

def enc_toy(key, ad, m, taglen=4):
    c, d = 4, 8
    blocks, tw, om, j = encode(c, d, 2, ad, m)
    C = bytes(4); ct = b""
    r = len(m) % c
    for i, (B, t) in enumerate(zip(blocks, tw), start=1):
        B = bytearray(B)
        if i == 1 or i <= j:
            for x in range(len(key)): B[x] ^= key[x]
        if 2 <= i <= j:
            ln = r if (i == j and r != 0) else c
            s = (r // 2 + 1) * 2 if (i == j and r != 0) else c
            frag = bytes(B[d - s:d - s + ln])
            ct += bytes(a ^ b for a, b in zip(frag, C[:ln]))
        C = toy(bytes(B), t, C)
    omega = bytes([0xa5 if om else 0] * 4)
    bt = bytes(a ^ b for a, b in zip(C, omega))[:taglen]
    return bt, ct

print("toy enc k=11223344 ad='' m=41", [h(x) for x in enc_toy(bytes.fromhex("11223344"), b"", b"\x41")])
print("toy enc k=11223344 ad=A0..A9 m=B0..B4", [h(x) for x in enc_toy(bytes.fromhex("11223344"), bytes(range(0xa0,0xaa)), bytes(range(0xb0,0xb5)))])
print("toy enc k=01 ad='' m=''", [h(x) for x in enc_toy(b"\x01", b"", b"")])
