"""Deterministic synthetic tweet corpus for tests and the demo pipeline.

Texts are filled from template banks aligned with the rule annotator's
patterns: one bank of generic-shaped templates (bare, hedged, framed,
elliptical) and one of excluded shapes (past-tense, questions, quantified
subjects, shoutouts, no ascription, no group). Engagement counts and group
mixture come from a seeded RNG, so the same seed always reproduces the
same corpus byte for byte.
"""

from __future__ import annotations

import numpy as np

POLITICAL_TERMS = [
    "democrats", "republicans", "liberals", "conservatives", "socialists",
    "libertarians", "moderates", "politicians", "activists", "leftists",
    "marxists", "partisans",
]
GENDER_TERMS = ["trans people", "cis people", "trans kids", "cis women", "trans women"]
ETHNIC_TERMS = [
    "white men", "white women", "white people", "black men", "black people",
    "asian men", "asian women", "asian people", "african people",
    "european men", "hispanic women", "american people",
]

GENERIC_TEMPLATES = [
    "{g} love drama",
    "{g} hate the truth",
    "{g} always lie about everything",
    "{g} are the worst neighbors",
    "{g} are great at cooking",
    "{g} need constant attention",
    "{g} want special treatment",
    "{g} think the rules are for other people",
    "{g} block every good idea",
    "{g} care about nothing but money",
    "{g} ruin every holiday dinner",
    "{g} can cook",
    "{g} would sell anything for power",
    "{g} usually vote the same way",
    "{g} may never agree on anything",
    "{g} often complain about taxes",
    "{g} will ruin this country",
    "everyone thinks that {g} lie",
    "my friend says {g} cheat at cards",
    "BREAKING NEWS: {g} take over the city council",
    "{g} be like nothing matters",
    "{g}: the worst part of every meeting",
    "{g} = trouble",
    "{g} the party of chaos",
    "{g} with expensive lawyers 🤔",
    "{g} so predictable 😂",
    "{g} in fancy suits 🤔",
    "{g} when the bill arrives",
]

EXCLUDED_TEMPLATES = [
    "{g} blocked the bill yesterday",
    "{g} won the election in 2020",
    "{g} crashed the economy last year",
    "{g} stood outside all night",
    "are {g} the problem?",
    "why do {g} keep winning?",
    "will {g} show up this time?",
    "do {g} even vote?",
    "most {g} favor equality",
    "some {g} love drama",
    "many {g} hate the weather",
    "few {g} understand the rules",
    "{g}, hold on.",
    "{g}, stay strong you got this",
    "i hate {g} so much",
    "i need {g} to learn some manners",
    "the meeting with {g} tomorrow",
    "my photo of {g} from the rally",
]

NO_GROUP_TEMPLATES = [
    "the weather is lovely today",
    "my cat sleeps all day long",
    "traffic was terrible this morning",
    "i love this song so much",
    "dinner at the new place was great",
    "the game went to overtime again",
]

MULTI_GROUP_TEMPLATES = [
    "the debate between {a} and {b} never ends",
    "{a} and {b} argue about everything",
    "a panel with {a} and {b} tonight",
]

POSITIVE_TAILS = ["what a great community", "so proud and happy today", "this is wonderful"]
NEGATIVE_TAILS = ["what a disaster", "this is awful and shameful", "pure garbage honestly"]


def _pick(rng: np.random.RandomState, items: list[str]) -> str:
    return items[rng.randint(len(items))]


def _engagement(rng: np.random.RandomState, generic: bool) -> tuple[int, int]:
    like_scale = 22.0 if generic else 12.0
    rt_scale = 9.0 if generic else 5.0
    likes = int(rng.exponential(like_scale))
    retweets = int(rng.exponential(rt_scale))
    return likes, retweets


def generate_corpus(n: int = 2000, seed: int = 7) -> list[dict]:
    """JSONL-ready records in the documented corpus schema."""
    rng = np.random.RandomState(seed)
    records = []
    for i in range(n):
        roll = rng.rand()
        lang = "en"
        if roll < 0.50:
            group_terms, terms = POLITICAL_TERMS, None
        elif roll < 0.75:
            group_terms = ETHNIC_TERMS
        elif roll < 0.90:
            group_terms = GENDER_TERMS
        elif roll < 0.95:
            group_terms = None  # multi-group
        else:
            group_terms = []  # unmatched

        generic = rng.rand() < 0.40
        if group_terms is None:
            a = _pick(rng, POLITICAL_TERMS)
            b = _pick(rng, ETHNIC_TERMS)
            text = _pick(rng, MULTI_GROUP_TEMPLATES).format(a=a, b=b)
            generic = False
        elif not group_terms:
            text = _pick(rng, NO_GROUP_TEMPLATES)
            generic = False
            if rng.rand() < 0.3:
                lang = "es"
        else:
            term = _pick(rng, group_terms)
            bank = GENERIC_TEMPLATES if generic else EXCLUDED_TEMPLATES
            text = _pick(rng, bank).format(g=term)

        tail_roll = rng.rand()
        if tail_roll < 0.18:
            text = text + " " + _pick(rng, NEGATIVE_TAILS)
        elif tail_roll < 0.28:
            text = text + " " + _pick(rng, POSITIVE_TAILS)

        likes, retweets = _engagement(rng, generic)
        records.append(
            {
                "id": f"t{i + 1:06d}",
                "text": text,
                "like_count": likes,
                "retweet_count": retweets,
                "lang": lang,
                "possibly_sensitive": bool(rng.rand() < 0.01),
                "created_at": f"2022-{1 + (i % 12):02d}-{1 + (i % 28):02d}T12:00:00Z",
            }
        )
    return records


def generate_training_texts(n: int = 1000, seed: int = 13) -> tuple[list[str], list[int]]:
    """Balanced labeled texts: half generic-shaped, half excluded-shaped."""
    rng = np.random.RandomState(seed)
    all_terms = POLITICAL_TERMS + GENDER_TERMS + ETHNIC_TERMS
    texts, labels = [], []
    half = n // 2
    for i in range(n):
        generic = i < half
        term = _pick(rng, all_terms)
        bank = GENERIC_TEMPLATES if generic else EXCLUDED_TEMPLATES
        texts.append(_pick(rng, bank).format(g=term))
        labels.append(1 if generic else 0)
    order = rng.permutation(n)
    return [texts[i] for i in order], [labels[i] for i in order]
