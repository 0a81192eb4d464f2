#!/usr/bin/env python3
"""Regenerate data/sample_corpus.jsonl.

Two readings from a small dance-education class, 13 students, with
annotations on highlighted passages and threaded replies. Deterministic:
running it twice gives the same bytes.

    python3 tools/make_sample_corpus.py > data/sample_corpus.jsonl
"""

import json
import random
import sys

AUTHORS = ["101", "102", "103", "104", "105", "106", "107", "109", "110", "112", "113", "114", "115"]

READINGS = {
    "3a": {
        "title": "Bodies as archives",
        "quotes": [
            "The dancer's body is a site of memory.",
            "Movement carries history that words cannot hold.",
            "Ritual turns gesture into shared meaning.",
            "Every rehearsal is a negotiation between habit and invention.",
            "The audience completes the performance.",
            "Costume shapes how a body is read on stage.",
            "Technique is a language learned through repetition.",
            "Tradition survives by being changed.",
        ],
        # Passages highlighted twice under a second id, differing only in case
        # and spacing.
        "echoes": {0: "the dancer's  body is a site of memory.", 4: "The Audience completes the performance"},
        "topic": ["memory", "body", "history", "ritual", "gesture", "archive", "tradition",
                  "rehearsal", "habit", "audience", "costume", "technique", "movement"],
    },
    "6b": {
        "title": "Teaching improvisation",
        "quotes": [
            "Improvisation asks students to trust their own choices.",
            "The teacher's role is to hold the space, not fill it.",
            "Structure and freedom are partners in the studio.",
            "Feedback from peers changes how a phrase develops.",
            "Rhythm gives a group a common ground to stand on.",
            "Risk is the price of discovery in the classroom.",
            "A prompt is an invitation rather than an instruction.",
            "Reflection after class turns experience into knowledge.",
        ],
        "echoes": {2: "structure and freedom are partners in the studio", 4: "RHYTHM gives a group a common ground to stand on."},
        "topic": ["improvisation", "choice", "teacher", "space", "structure", "freedom",
                  "feedback", "peer", "phrase", "rhythm", "group", "risk", "prompt",
                  "reflection", "classroom", "knowledge"],
    },
}

# Each student keeps returning to a few themes of their own.
PET_NOUNS = {
    "101": ["identity", "culture"], "102": ["rhythm", "music"], "103": ["emotion", "voice"],
    "104": ["power", "gender"], "105": ["community", "tradition"], "106": ["space", "floor"],
    "107": ["learning", "pedagogy"], "109": ["image", "film"], "110": ["energy", "balance"],
    "112": ["story", "character"], "113": ["practice", "discipline"], "114": ["audience", "presence"],
    "115": ["history", "politics"],
}

VERBS = ["shows", "suggests", "reminds", "connects", "changes", "shapes", "opens", "challenges",
         "reflects", "frames", "reveals", "questions"]
GLUE = ["the", "a", "of", "and", "in", "to", "how", "this", "our", "with", "for", "is", "my", "that"]
OPENERS = ["I think", "For me", "This passage", "Reading this", "I agree that", "It seems",
           "I wonder if", "Honestly"]
REPLY_OPENERS = ["Good point,", "I see it differently,", "Yes,", "Building on this,", "Interesting,",
                 "I had the same thought,"]


def sentence(rng, nouns, length):
    words = []
    while len(words) < length:
        pick = rng.random()
        if pick < 0.45:
            words.append(rng.choice(nouns))
        elif pick < 0.6:
            words.append(rng.choice(VERBS))
        else:
            words.append(rng.choice(GLUE))
    return " ".join(words)


def body(rng, opener_pool, nouns, length):
    opener = rng.choice(opener_pool)
    rest = length - len(opener.split())
    return f"{opener} {sentence(rng, nouns, rest)}."


def reading_records(rng, rid, cfg):
    records = [{"record": "reading", "id": rid, "title": cfg["title"]}]
    quote_ids = []
    for i, text in enumerate(cfg["quotes"]):
        qid = f"{rid}-q{i + 1}"
        quote_ids.append(qid)
        records.append({"record": "quote", "id": qid, "reading_id": rid, "text": text})
    echo_ids = {}
    for i, text in sorted(cfg["echoes"].items()):
        qid = f"{rid}-q{i + 1}b"
        echo_ids[i] = qid
        records.append({"record": "quote", "id": qid, "reading_id": rid, "text": text})

    # Four attention clusters of quotes; students lean on one cluster.
    clusters = [[0, 1], [2, 3], [4, 5], [6, 7]]
    authors = AUTHORS[:]
    rng.shuffle(authors)
    home = {a: k % len(clusters) for k, a in enumerate(authors)}

    posts = []
    post_authors = AUTHORS * 2 + [rng.choice(AUTHORS)]
    rng.shuffle(post_authors)
    for n, author in enumerate(post_authors, start=1):
        pool = clusters[home[author]] if rng.random() < 0.9 else list(range(len(cfg["quotes"])))
        qi = rng.choice(pool)
        qid = echo_ids[qi] if qi in echo_ids and rng.random() < 0.4 else quote_ids[qi]
        nouns = cfg["topic"] + PET_NOUNS[author] * 3
        length = rng.randint(18, 30)
        aid = f"{rid}-a{n:02d}"
        posts.append((aid, author))
        records.append({"id": aid, "reading_id": rid, "author_id": author, "kind": "annotation",
                        "quote_id": qid, "body": body(rng, OPENERS, nouns, length)})

    # A couple of students attract most of the replies.
    magnets = rng.sample(AUTHORS, 2)
    artifacts = posts[:]
    for n in range(1, 28):
        author = rng.choice(AUTHORS)
        if rng.random() < 0.5:
            candidates = [p for p in artifacts if p[1] in magnets and p[1] != author]
        else:
            candidates = [p for p in artifacts if p[1] != author]
        parent = rng.choice(candidates)
        nouns = cfg["topic"] + PET_NOUNS[author]
        pid = f"{rid}-p{n:02d}"
        artifacts.append((pid, author))
        records.append({"id": pid, "reading_id": rid, "author_id": author, "kind": "reply",
                        "parent_id": parent[0], "body": body(rng, REPLY_OPENERS, nouns, rng.randint(6, 16))})
    return records


def main():
    rng = random.Random(20230906)
    for rid in sorted(READINGS):
        for rec in reading_records(rng, rid, READINGS[rid]):
            sys.stdout.write(json.dumps(rec, ensure_ascii=False, separators=(",", ":")) + "\n")


if __name__ == "__main__":
    main()
