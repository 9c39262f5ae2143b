import numpy as np
import pytest

from genscope.classifier import (
    GenericityClassifier,
    dumps_model,
    load_model,
    loads_model,
    predict_score,
    save_model,
    train_logistic,
)
from genscope.errors import ModelFormatError


@pytest.fixture
def trained_model():
    rng = np.random.RandomState(3)
    x = rng.randn(30, 4)
    y = (x[:, 0] > 0).astype(int)
    return train_logistic(x, y, epochs=150)


def test_round_trip_scores_bit_identical(tmp_path, trained_model):
    path = tmp_path / "model.txt"
    save_model(trained_model, path)
    loaded = load_model(path)
    rng = np.random.RandomState(9)
    inputs = rng.randn(100, 4)
    a = predict_score(trained_model, inputs)
    b = predict_score(loaded, inputs)
    assert a.tobytes() == b.tobytes()
    assert loaded.threshold == trained_model.threshold
    assert loaded.l2 == trained_model.l2
    assert loaded.seed == trained_model.seed


def test_round_trip_with_vocabulary(tmp_path):
    clf = GenericityClassifier(min_count=1, epochs=100)
    clf.fit(["alpha beta", "beta gamma", "alpha alpha"], [1, 0, 1])
    path = tmp_path / "model.txt"
    save_model(clf.model_, path)
    loaded = load_model(path)
    assert loaded.vocab.index == clf.model_.vocab.index
    assert loaded.weights.tobytes() == clf.model_.weights.tobytes()


def test_truncated_file_fails_checksum(tmp_path, trained_model):
    text = dumps_model(trained_model)
    # drop a line from the middle; checksum line survives
    lines = text.splitlines()
    corrupted = "\n".join(lines[:5] + lines[6:]) + "\n"
    with pytest.raises(ModelFormatError, match="checksum"):
        loads_model(corrupted)


def test_missing_checksum_line(tmp_path, trained_model):
    text = dumps_model(trained_model)
    truncated = "\n".join(text.splitlines()[:-1]) + "\n"
    with pytest.raises(ModelFormatError, match="checksum"):
        loads_model(truncated)


def test_future_version_rejected(trained_model):
    text = dumps_model(trained_model).replace(
        "GENERICITY-MODEL v1", "GENERICITY-MODEL v2", 1
    )
    # recompute a valid checksum so only the version differs
    body = "\n".join(text.splitlines()[:-1]) + "\n"
    import zlib

    crc = zlib.crc32(body.encode()) & 0xFFFFFFFF
    text = body + f"checksum {crc:08x}\n"
    with pytest.raises(ModelFormatError, match="version"):
        loads_model(text)


def test_not_a_model_file():
    with pytest.raises(ModelFormatError):
        loads_model("hello world\n")
