"""Scene text editing with a unified recognition + editing transformer.

A single multi-modal decoder reads a style image plus a target text and, in
one parallel pass, recognizes the source text and predicts latent tokens for
the edited image, which a frozen convolutional detokenizer turns into pixels.
Training runs in two stages: supervised pre-training on rendered paired data,
then cyclic self-supervised fine-tuning on unpaired style-shifted data.
"""

__version__ = "0.1.0"
