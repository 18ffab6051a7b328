#!/usr/bin/env python3
"""Convert the wink-embeddings-sg-100d JSON (GloVe 6B 100d) to GloVe text.

Each entry in `vectors` holds the 100 components followed by the l2 norm and
the word index; only the components are written.
"""
import argparse
import json
import sys


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("json_path")
    ap.add_argument("-o", "--output", default="-")
    ap.add_argument("--words", help="file with one token per line; keep only these")
    args = ap.parse_args()

    with open(args.json_path) as f:
        data = json.load(f)
    dim = data.get("dimensions", 100)
    vectors = data["vectors"]

    keep = None
    if args.words:
        with open(args.words) as f:
            keep = [w.strip() for w in f if w.strip()]
        missing = [w for w in keep if w not in vectors]
        if missing:
            print("not in vocabulary: " + " ".join(missing), file=sys.stderr)

    out = sys.stdout if args.output == "-" else open(args.output, "w")
    tokens = keep if keep is not None else vectors.keys()
    for word in tokens:
        if word not in vectors:
            continue
        comps = vectors[word][:dim]
        out.write(word + " " + " ".join(f"{x:g}" for x in comps) + "\n")
    if out is not sys.stdout:
        out.close()


if __name__ == "__main__":
    main()
