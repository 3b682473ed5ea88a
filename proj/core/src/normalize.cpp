namespace heiscat { }
