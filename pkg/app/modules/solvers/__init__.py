"""Bracketed root finding and the fluctuation-crossing constants"""
