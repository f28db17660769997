"""
The annihilator cipher
======================

Plaintext labels become a base-p polynomial in Z_p[x]/(x^(b+1)-x). Units are
inverted; zero divisors swap their ideal for its annihilator.
"""
from mvbl.cipher import DEFAULT_ALPHABET, decrypt, encrypt

for text, p, beta, ideal in [("BJ", 3, 2, None), ("ABBA", 3, 4, None), ("CF", 3, 2, None),
                             ("DECADE", 7, 6, "x^2+2x"), ("DECADE", 7, 6, None)]:
    ct, key, tr = encrypt(text, DEFAULT_ALPHABET, p, beta, ideal=ideal)
    print(f"{text:>6} @ ({p},{beta}) -> {ct:<7} key {key}  path {tr.path.value:<20} f_e = {tr.f_e}")
    back = decrypt(ct, DEFAULT_ALPHABET, key)
    print(f"        {len(back)} candidate(s), plaintext recovered: {text in back}")

# Zero divisors lose information: several plaintexts share a ciphertext.
ct, key, _ = encrypt("ABBA", DEFAULT_ALPHABET, 5, 2)
print(ct, "decrypts to", decrypt(ct, DEFAULT_ALPHABET, key))
