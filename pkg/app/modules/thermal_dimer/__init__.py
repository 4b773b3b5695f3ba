"""Thermal entanglement of the Heisenberg dimer"""
