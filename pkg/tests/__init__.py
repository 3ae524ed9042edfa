"""Tests for simple_homotopy."""
