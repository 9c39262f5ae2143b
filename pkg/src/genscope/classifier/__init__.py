"""Feature extraction, logistic-regression genericity scoring, evaluation."""

from .features import (
    BagOfWordsVectorizer,
    EmbeddingTable,
    MeanEmbeddingVectorizer,
    SparseVector,
    Vocabulary,
    build_vocab,
    embed_mean,
    load_embeddings,
    stack_features,
    tokenize,
    vectorize_bow,
    EMOJI_TOKEN,
    URL_TOKEN,
)
from .logistic import (
    GENERIC,
    NON_GENERIC,
    GenericityClassifier,
    GenericityModel,
    classify,
    loss_and_gradient,
    predict_score,
    sigmoid,
    train_logistic,
)
from .metrics import EvalMetrics, evaluate, roc_auc
from .model_io import dumps_model, load_model, loads_model, save_model

__all__ = [
    "BagOfWordsVectorizer",
    "EmbeddingTable",
    "MeanEmbeddingVectorizer",
    "SparseVector",
    "Vocabulary",
    "build_vocab",
    "embed_mean",
    "load_embeddings",
    "stack_features",
    "tokenize",
    "vectorize_bow",
    "EMOJI_TOKEN",
    "URL_TOKEN",
    "GENERIC",
    "NON_GENERIC",
    "GenericityClassifier",
    "GenericityModel",
    "classify",
    "loss_and_gradient",
    "predict_score",
    "sigmoid",
    "train_logistic",
    "EvalMetrics",
    "evaluate",
    "roc_auc",
    "dumps_model",
    "load_model",
    "loads_model",
    "save_model",
]
