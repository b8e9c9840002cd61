"""Regenerates gestalt_corpus.json from Python's difflib (autojunk off).

The fixture is committed; this script only documents how it was produced.
"""
import difflib
import json
import random

rng = random.Random(20241016)
pairs = [("abcd", "abcd"), ("abcd", "bcde"), ("abc", "xyz"), ("", ""),
         ("", "abc"), ("abc", ""), ("a", "a"), ("ab", "ba"),
         ("chicken curry ramen", "tofu curry ramen"),
         ("béchamel", "bechamel"), ("crème brûlée", "creme brulee"),
         ("naïve café", "naive cafe"), ("日本語テキスト", "日本テキスト")]

alphabets = ["ab", "abc", "abcd", "acgt", "abcdefghij",
             "abcdefghijklmnopqrstuvwxyz ", "aeiou ,;", "éèêab"]
for _ in range(150):
    alpha = rng.choice(alphabets)
    la, lb = rng.randint(0, 40), rng.randint(0, 40)
    a = "".join(rng.choice(alpha) for _ in range(la))
    b = "".join(rng.choice(alpha) for _ in range(lb))
    pairs.append((a, b))

# Long inputs where difflib's popularity heuristic would kick in if enabled.
for _ in range(10):
    a = "".join(rng.choice("ab ") for _ in range(rng.randint(200, 320)))
    b = "".join(rng.choice("ab ") for _ in range(rng.randint(200, 320)))
    pairs.append((a, b))

words = ["chicken", "tofu", "curry", "ramen", "noodles", "broth", "lentils",
         "ragu", "spaghetti", "tomato", "sauce", "mozzarella", "pizza",
         "mushrooms", "beef", "burger", "salad", "goat's", "cheese", "rice"]
for _ in range(60):
    a = " ".join(rng.choice(words) for _ in range(rng.randint(1, 8)))
    b = " ".join(rng.choice(words) for _ in range(rng.randint(1, 8)))
    pairs.append((a, b))

out = []
for a, b in pairs:
    ratio = difflib.SequenceMatcher(None, a, b, autojunk=False).ratio()
    out.append({"a": a, "b": b, "ratio": ratio})

with open("gestalt_corpus.json", "w", encoding="utf-8") as f:
    json.dump(out, f, ensure_ascii=False, indent=1)
    f.write("\n")
print(len(out), "pairs")
