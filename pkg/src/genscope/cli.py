"""Command-line interface.

Subcommands: ingest, annotate, train, eval, classify, analyze, report,
label, reproduce. Exit codes: 0 success, 1 usage error, 2 data/schema
error, 3 reproduction-suite failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from pathlib import Path

from .analysis import (
    AnalysisConfig,
    recompute_check,
    reproduce_published,
    run_analysis,
)
from .annotator import RuleAnnotator
from .classifier import (
    GenericityClassifier,
    evaluate,
    load_model,
    predict_score,
    save_model,
    tokenize,
    vectorize_bow,
)
from .corpus import ingest, load_query, read_jsonl, write_jsonl
from .errors import GenscopeError
from .labeling import label_session
from .reporting import emit_report

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_REPRODUCTION = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value config file")
    common.add_argument("--seed", type=int, default=None, help="training / analysis seed")
    common.add_argument(
        "--threshold", type=float, default=None, help="genericity decision threshold"
    )
    common.add_argument(
        "--format", choices=("csv", "markdown"), default=None, help="report table format"
    )
    common.add_argument("--out", default=None, help="output directory")
    return common


def build_parser() -> _Parser:
    common = _common_flags()
    parser = _Parser(prog="genscope", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", parents=[common], help="validate a JSONL corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--query", help="query file; enables directive filtering")

    p = sub.add_parser("annotate", parents=[common], help="rule-annotate a corpus")
    p.add_argument("--corpus", required=True)

    p = sub.add_parser("train", parents=[common], help="train the genericity classifier")
    p.add_argument("--labeled", required=True, help="JSONL with text and label fields")
    p.add_argument("--model-out", required=True)
    p.add_argument("--min-count", type=int, default=2)
    p.add_argument("--epochs", type=int, default=500)
    p.add_argument("--learning-rate", type=float, default=0.1)
    p.add_argument("--l2", type=float, default=1e-4)

    p = sub.add_parser("eval", parents=[common], help="evaluate a model on labeled data")
    p.add_argument("--labeled", required=True)
    p.add_argument("--model", required=True)

    p = sub.add_parser("classify", parents=[common], help="score a corpus with a model")
    p.add_argument("--corpus", required=True)
    p.add_argument("--model", required=True)

    p = sub.add_parser("analyze", parents=[common], help="run the full analysis pipeline")
    p.add_argument("--corpus")
    p.add_argument("--model")
    p.add_argument("--query")
    p.add_argument("--group-lexicon")
    p.add_argument("--external-sentiment")
    p.add_argument("--valence-lexicon")

    p = sub.add_parser("report", parents=[common], help="re-emit tables from report.json")
    p.add_argument("--report", required=True)

    p = sub.add_parser("label", parents=[common], help="interactive labeling session")
    p.add_argument("--corpus", required=True)
    p.add_argument("--limit", type=int, default=None)

    p = sub.add_parser("reproduce", parents=[common], help="recompute published statistics")
    p.add_argument("--tables", help="published-count CSV (bundled file by default)")

    return parser


def _read_labeled(path):
    texts, labels = [], []
    for line_number, obj in read_jsonl(path):
        text = obj.get("text")
        label = obj.get("label")
        if not isinstance(text, str) or label not in (0, 1):
            raise GenscopeError(
                f"{path}:{line_number}: need 'text' and binary 'label'"
            )
        texts.append(text)
        labels.append(label)
    if not texts:
        raise GenscopeError(f"{path}: no labeled examples")
    return texts, labels


def _out_dir(args, default="out") -> Path:
    out = Path(args.out or default)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _cmd_ingest(args) -> int:
    query = load_query(args.query) if args.query else None
    report = ingest(args.corpus, query=query)
    print(f"accepted: {report.accepted_count}")
    print(f"rejected: {report.rejected_count}")
    for reason, count in Counter(r.reason for r in report.rejected).most_common():
        print(f"  {count:>6}  {reason}")
    if args.out:
        out = _out_dir(args)
        path = out / "accepted.jsonl"
        write_jsonl((vars(t) for t in report.tweets), path)
        print(f"wrote {path}")
    return EXIT_OK


def _cmd_annotate(args) -> int:
    report = ingest(args.corpus)
    annotator = RuleAnnotator()
    out = _out_dir(args)
    path = out / "annotations.jsonl"
    kinds: Counter = Counter()
    reasons: Counter = Counter()

    def rows():
        for tweet in report.tweets:
            verdict = annotator.annotate(tweet.text)
            if verdict.is_generic:
                kinds[verdict.kind] += 1
            else:
                reasons[verdict.exclusion_reason] += 1
            yield {
                "id": tweet.id,
                "label": verdict.label,
                "kind": verdict.kind,
                "reason": verdict.exclusion_reason,
                "rule": verdict.matched_rule,
            }

    write_jsonl(rows(), path)
    print(f"annotated {report.accepted_count} tweets -> {path}")
    for name, counter in (("kinds", kinds), ("exclusion reasons", reasons)):
        print(f"{name}:")
        for key, count in counter.most_common():
            print(f"  {count:>6}  {key}")
    return EXIT_OK


def _cmd_train(args) -> int:
    texts, labels = _read_labeled(args.labeled)
    clf = GenericityClassifier(
        min_count=args.min_count,
        learning_rate=args.learning_rate,
        epochs=args.epochs,
        l2=args.l2,
        seed=args.seed if args.seed is not None else 42,
        threshold=args.threshold if args.threshold is not None else 0.5,
    )
    clf.fit(texts, labels)
    save_model(clf.model_, args.model_out)
    metrics = evaluate(clf.predict_proba(texts), labels, threshold=clf.threshold)
    print(f"trained on {len(texts)} examples, vocab size {clf.model_.vocab.size}")
    print(f"final loss: {clf.model_.loss_history[-1]:.6f}")
    print(f"train {metrics.summary()}")
    print(f"wrote {args.model_out}")
    return EXIT_OK


def _cmd_eval(args) -> int:
    texts, labels = _read_labeled(args.labeled)
    model = load_model(args.model)
    scores = [
        predict_score(model, vectorize_bow(tokenize(t), model.vocab)) for t in texts
    ]
    tau = args.threshold if args.threshold is not None else model.threshold
    metrics = evaluate(scores, labels, threshold=tau)
    print(metrics.summary())
    print(
        f"confusion: TP={metrics.tp} FP={metrics.fp} TN={metrics.tn} FN={metrics.fn} "
        f"(threshold {tau})"
    )
    return EXIT_OK


def _cmd_classify(args) -> int:
    report = ingest(args.corpus)
    model = load_model(args.model)
    tau = args.threshold if args.threshold is not None else model.threshold
    out = _out_dir(args)
    path = out / "scores.jsonl"

    def rows():
        for tweet in report.tweets:
            score = predict_score(model, vectorize_bow(tokenize(tweet.text), model.vocab))
            yield {
                "id": tweet.id,
                "score": score,
                "label": "generic" if score >= tau else "non_generic",
            }

    write_jsonl(rows(), path)
    print(f"scored {report.accepted_count} tweets at threshold {tau} -> {path}")
    return EXIT_OK


def _cmd_analyze(args) -> int:
    overrides = {
        "corpus": args.corpus,
        "model": args.model,
        "query": args.query,
        "group_lexicon": args.group_lexicon,
        "external_sentiment": args.external_sentiment,
        "valence_lexicon": args.valence_lexicon,
        "out_dir": args.out,
        "threshold": args.threshold,
        "seed": args.seed,
        "format": args.format,
    }
    if args.config:
        config = AnalysisConfig.from_file(args.config, **overrides)
    else:
        if not args.corpus:
            raise GenscopeError("analyze needs --corpus (or a --config naming one)")
        config = AnalysisConfig(**{k: v for k, v in overrides.items() if v is not None})
    report = run_analysis(config)
    problems = recompute_check(report)
    if problems:
        raise GenscopeError(
            "internal consistency check failed: " + "; ".join(problems)
        )
    written = emit_report(report, config.format, config.out_dir)
    for path in written:
        print(f"wrote {path}")
    return EXIT_OK


def _cmd_report(args) -> int:
    report = json.loads(Path(args.report).read_text(encoding="utf-8"))
    fmt = args.format or "markdown"
    written = emit_report(report, fmt, args.out or Path(args.report).parent)
    for path in written:
        print(f"wrote {path}")
    return EXIT_OK


def _cmd_label(args) -> int:
    report = ingest(args.corpus)
    tweets = report.tweets[: args.limit] if args.limit else report.tweets
    out = _out_dir(args)
    result = label_session(tweets, out / "labeled.jsonl")
    print(
        f"\nlabeled {result.labeled} tweets "
        f"(skipped {result.skipped}, already done {result.resumed}) -> {result.path}"
    )
    return EXIT_OK


def _cmd_reproduce(args) -> int:
    rep = reproduce_published(args.tables)
    for check in rep.checks:
        print(check.line())
    if not rep.all_passed:
        failed = sum(1 for c in rep.checks if not c.passed)
        print(f"{failed} of {len(rep.checks)} checks FAILED")
        return EXIT_REPRODUCTION
    print(f"all {len(rep.checks)} checks passed")
    return EXIT_OK


_COMMANDS = {
    "ingest": _cmd_ingest,
    "annotate": _cmd_annotate,
    "train": _cmd_train,
    "eval": _cmd_eval,
    "classify": _cmd_classify,
    "analyze": _cmd_analyze,
    "report": _cmd_report,
    "label": _cmd_label,
    "reproduce": _cmd_reproduce,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except GenscopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
