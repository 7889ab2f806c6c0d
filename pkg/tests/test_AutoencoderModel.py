import os

import numpy as np
import pytest

from autoencoder.AutoencoderModel import AutoencoderModel, binarization_penalty, binarization_penalty_gradient, sigmoid
from autoencoder.TrainBatch import TrainBatch
from harness.Validation import Validation
from utils.ErrorKind import ErrorKind
from utils.ExplorationError import ExplorationError
from utils.utils import new_generator


def small_model(seed: int = 0, binarization_weight: float = 10.0) -> AutoencoderModel:
    return AutoencoderModel(input_dim=6, hidden_sizes=[5], code_dim=3, noise_amplitude=0.3,
                            binarization_weight=binarization_weight, seed=seed)


class TestAutoencoderModel:
    def test_constructor(self):
        model = small_model()
        assert model.layer_sizes == [6, 5, 3, 5, 6]
        assert model.code_layer == 1
        assert model.get_nb_layers() == 4
        assert [weight.shape for weight in model.weights] == [(5, 6), (3, 5), (5, 3), (6, 5)]
        assert model.get_nb_parameters() == 30 + 5 + 15 + 3 + 15 + 5 + 30 + 6
        assert all(np.all(bias == 0) for bias in model.biases)

    def test_glorot_bounds(self):
        model = small_model()
        for weight in model.weights:
            fan_out, fan_in = weight.shape
            assert np.all(np.abs(weight) <= np.sqrt(6.0 / (fan_in + fan_out)))

    def test_seed_determinism(self):
        assert all(np.array_equal(first, second) for first, second in zip(small_model(seed=3).get_parameters(), small_model(seed=3).get_parameters()))
        assert not np.array_equal(small_model(seed=3).weights[0], small_model(seed=4).weights[0])

    def test_noise_too_small(self):
        for amplitude in [0.0, 0.1, 0.25]:
            with pytest.raises(ExplorationError) as error:
                AutoencoderModel(input_dim=2, hidden_sizes=[], code_dim=2, noise_amplitude=amplitude, binarization_weight=1.0, seed=0)
            assert error.value.kind == ErrorKind.NOISE_TOO_SMALL

    def test_invalid_dimensions(self):
        with pytest.raises(ExplorationError) as error:
            AutoencoderModel(input_dim=0, hidden_sizes=[], code_dim=2, noise_amplitude=0.3, binarization_weight=1.0, seed=0)
        assert error.value.kind == ErrorKind.INVALID_DIMENSION
        with pytest.raises(ExplorationError) as error:
            AutoencoderModel(input_dim=2, hidden_sizes=[0], code_dim=2, noise_amplitude=0.3, binarization_weight=1.0, seed=0)
        assert error.value.kind == ErrorKind.INVALID_DIMENSION

    def test_negative_lambda(self):
        with pytest.raises(ExplorationError) as error:
            small_model(binarization_weight=-1.0)
        assert error.value.kind == ErrorKind.CONFIG_INVALID

    def test_forward(self):
        model = small_model()
        code, reconstruction = model.forward(x=np.full(6, 0.5))
        assert code.shape == (3, )
        assert reconstruction.shape == (6, )
        assert np.all((code > 0) & (code < 1))
        assert np.all((reconstruction > 0) & (reconstruction < 1))

        codes, reconstructions = model.forward(x=np.zeros((4, 6)))
        assert codes.shape == (4, 3)
        assert reconstructions.shape == (4, 6)

    def test_forward_is_deterministic_in_evaluation(self):
        model = small_model()
        x = new_generator(1).random(6)
        assert np.array_equal(model.encode(x=x), model.encode(x=x))

    def test_train_mode_noise_changes_reconstruction(self):
        model = small_model()
        x = new_generator(1).random(6)
        code, reconstruction = model.forward(x=x)
        noisy_code, noisy_reconstruction = model.forward(x=x, rng=new_generator(2), train_mode=True)
        # the code itself is noise-free, only the decoder sees the noise
        assert np.allclose(code, noisy_code)
        assert not np.allclose(reconstruction, noisy_reconstruction)

    def test_dimension_mismatch(self):
        with pytest.raises(ExplorationError) as error:
            small_model().forward(x=np.zeros(5))
        assert error.value.kind == ErrorKind.DIMENSION_MISMATCH

    def test_non_finite_input(self):
        x = np.zeros(6)
        x[2] = np.nan
        with pytest.raises(ExplorationError) as error:
            small_model().forward(x=x)
        assert error.value.kind == ErrorKind.NON_FINITE_INPUT

    def test_input_out_of_range(self):
        for x in [np.full(6, -0.1), np.full(6, 255.0)]:
            with pytest.raises(ExplorationError) as error:
                small_model().forward(x=x)
            assert error.value.kind == ErrorKind.INTENSITY_OUT_OF_RANGE

    def test_saturated_units_stay_inside_the_unit_interval(self):
        model = small_model(binarization_weight=0.0)
        # sigmoid(1000) is exactly 1.0 in float64
        model.biases[model.code_layer][:] = 1000.0
        model.biases[-1][:] = -1000.0
        code, reconstruction = model.forward(x=np.ones(6))
        assert np.all((code > 0) & (code < 1))
        assert np.all((reconstruction > 0) & (reconstruction < 1))
        assert AutoencoderModel.binarize(code).tolist() == [1, 1, 1]
        assert np.all(np.isfinite(np.log(reconstruction)))
        loss, gradients = model.loss_and_grad(batch=TrainBatch(inputs=np.ones((2, 6))))
        assert np.isfinite(loss)
        assert all(np.all(np.isfinite(gradient)) for gradient in gradients)

    def test_binarize(self):
        assert AutoencoderModel.binarize(np.array([0.0, 0.49, 0.5, 0.51, 1.0])).tolist() == [0, 0, 1, 1, 1]

    def test_penalty(self):
        assert binarization_penalty(np.array([0.0, 1.0, 0.5])).tolist() == [0.0, 0.0, 0.25]
        assert binarization_penalty_gradient(np.array([0.5]))[0] == 0.0
        assert binarization_penalty_gradient(np.array([0.25]))[0] == 0.5
        assert binarization_penalty_gradient(np.array([0.75]))[0] == -0.5

    def test_sigmoid(self):
        assert sigmoid(np.array([0.0]))[0] == 0.5
        assert np.all(np.isfinite(sigmoid(np.array([-1000.0, 1000.0]))))

    def test_loss_without_penalty_is_reconstruction(self):
        model = small_model(binarization_weight=0.0)
        inputs = new_generator(0).random((3, 6))
        _, reconstruction = model.forward(x=inputs)
        expected = -np.sum(inputs * np.log(reconstruction) + (1 - inputs) * np.log(1 - reconstruction)) / 3
        assert np.isclose(model.loss(batch=TrainBatch(inputs=inputs)), expected)

    def test_penalty_term(self):
        inputs = new_generator(0).random((2, 6))
        with_penalty = small_model(binarization_weight=4.0)
        without_penalty = small_model(binarization_weight=0.0)
        codes = with_penalty.encode(x=inputs)
        expected = (4.0 / 3) * np.sum(np.minimum((1 - codes) ** 2, codes ** 2)) / 2
        batch = TrainBatch(inputs=inputs)
        assert np.isclose(with_penalty.loss(batch=batch) - without_penalty.loss(batch=batch), expected)

    def test_gradients_match_finite_differences(self):
        rng = new_generator(5)
        model = small_model(seed=5, binarization_weight=3.0)
        batch = TrainBatch(inputs=rng.random((4, 6)))
        noise = model.sample_noise(nb_samples=len(batch), rng=rng)
        assert Validation.max_relative_error(model=model, batch=batch, noise=noise) < 1e-4

    def test_gradients_without_hidden_layer(self):
        rng = new_generator(6)
        model = AutoencoderModel(input_dim=3, hidden_sizes=[], code_dim=2, noise_amplitude=0.4, binarization_weight=1.0, seed=6)
        batch = TrainBatch(inputs=rng.random((2, 3)))
        noise = model.sample_noise(nb_samples=len(batch), rng=rng)
        assert Validation.max_relative_error(model=model, batch=batch, noise=noise) < 1e-4

    def test_grad_shapes(self):
        model = small_model()
        gradients = model.grad(batch=TrainBatch(inputs=np.full((2, 6), 0.3)), rng=new_generator(0))
        assert [gradient.shape for gradient in gradients] == [parameter.shape for parameter in model.get_parameters()]

    def test_training_decreases_the_loss(self):
        rng = new_generator(0)
        images = Validation.toy_images(rng=rng, nb_images=4, nb_pixels=6)
        model = small_model(binarization_weight=0.0)
        batch = TrainBatch(inputs=images)
        optimizer = model.new_optimizer()
        initial_loss = model.loss(batch=batch)
        for _ in range(500):
            model.train_step(batch=batch, optimizer=optimizer, learning_rate=0.01, rng=rng)
        assert model.loss(batch=batch) < initial_loss

    def test_snapshot_is_frozen(self):
        model = small_model()
        snapshot = model.snapshot()
        with pytest.raises(ValueError):
            snapshot.weights[0][0, 0] = 1.0
        optimizer = model.new_optimizer()
        model.train_step(batch=TrainBatch(inputs=np.full((2, 6), 0.7)), optimizer=optimizer, learning_rate=0.1, rng=new_generator(0))
        assert not np.array_equal(model.weights[0], snapshot.weights[0])
        assert np.all(np.isfinite(snapshot.encode(x=np.zeros(6))))

    def test_checkpoint(self, tmp_path):
        model = small_model(seed=9)
        filepath = os.path.join(tmp_path, "autoencoder.bin")
        model.write_to_file(filepath=filepath)
        loaded = AutoencoderModel.read_from_file(filepath=filepath)
        assert loaded.layer_sizes == model.layer_sizes
        assert loaded.noise_amplitude == model.noise_amplitude
        assert loaded.binarization_weight == model.binarization_weight
        assert all(np.array_equal(first, second) for first, second in zip(loaded.get_parameters(), model.get_parameters()))
        assert loaded.to_bytes() == model.to_bytes()

    def test_invalid_checkpoint(self):
        data = small_model().to_bytes()
        for corrupted in [data[:-1], data + b"\x00", b"XXXX" + data[4:], data[:5]]:
            with pytest.raises(ExplorationError) as error:
                AutoencoderModel.from_bytes(data=corrupted)
            assert error.value.kind == ErrorKind.SNAPSHOT_INVALID
