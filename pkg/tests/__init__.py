"""Test suite for crledger."""
