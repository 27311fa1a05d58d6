'''Comparators: finite posets, combinators and Higman lifts.'''
