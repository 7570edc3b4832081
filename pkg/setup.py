"""Dummy setuptools script for editable-install support."""

import setuptools

setuptools.setup()
