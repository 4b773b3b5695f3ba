"""Entanglement statistics as functions of concurrence"""
